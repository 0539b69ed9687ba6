#include "hypogen/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>

#include "hypogen/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "graph cache assumes a little-endian host");

namespace hypogen {

Hypergraph Hypergraph::build(const CorpusSlice& slice) {
    const Vocabulary& vocab = slice.corpus().vocab();

    // Collect the slice's entity ids, then assign node ids in sorted token order.
    std::vector<std::uint32_t> entity_ids;
    for (std::size_t i = 0; i < slice.size(); ++i) {
        const PaperRecord& rec = slice.record(i);
        entity_ids.insert(entity_ids.end(), rec.authors.begin(), rec.authors.end());
        entity_ids.insert(entity_ids.end(), rec.concepts.begin(), rec.concepts.end());
    }
    std::sort(entity_ids.begin(), entity_ids.end());
    entity_ids.erase(std::unique(entity_ids.begin(), entity_ids.end()), entity_ids.end());

    Hypergraph g;
    g.tokens_.reserve(entity_ids.size());
    for (std::uint32_t e : entity_ids) g.tokens_.push_back(vocab.token(e));
    std::vector<std::uint32_t> order(entity_ids.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return g.tokens_[a] < g.tokens_[b]; });

    std::vector<std::string> sorted_tokens(order.size());
    std::vector<EntityKind> sorted_kinds(order.size());
    std::vector<std::uint32_t> entity_to_node(order.size());
    for (std::uint32_t node = 0; node < order.size(); ++node) {
        std::uint32_t pos = order[node];
        sorted_tokens[node] = std::move(g.tokens_[pos]);
        sorted_kinds[node] = vocab.kind(entity_ids[pos]);
        entity_to_node[pos] = node;
    }
    g.tokens_ = std::move(sorted_tokens);
    g.kinds_ = std::move(sorted_kinds);

    auto to_node = [&](std::uint32_t entity) {
        auto it = std::lower_bound(entity_ids.begin(), entity_ids.end(), entity);
        return entity_to_node[static_cast<std::uint32_t>(it - entity_ids.begin())];
    };

    // Edge -> node CSR, one hyperedge per record over authors + concepts.
    const std::size_t n_edges = slice.size();
    g.edge_off_.assign(n_edges + 1, 0);
    for (std::size_t i = 0; i < n_edges; ++i) {
        const PaperRecord& rec = slice.record(i);
        g.edge_off_[i + 1] = g.edge_off_[i] + rec.authors.size() + rec.concepts.size();
    }
    g.edge_nodes_.resize(g.edge_off_[n_edges]);
    for (std::size_t i = 0; i < n_edges; ++i) {
        const PaperRecord& rec = slice.record(i);
        std::uint64_t w = g.edge_off_[i];
        for (std::uint32_t a : rec.authors) g.edge_nodes_[w++] = to_node(a);
        for (std::uint32_t c : rec.concepts) g.edge_nodes_[w++] = to_node(c);
    }

    // Node -> edge CSR by counting sort over the edge members.
    g.node_off_.assign(g.tokens_.size() + 1, 0);
    for (std::uint32_t node : g.edge_nodes_) ++g.node_off_[node + 1];
    for (std::size_t i = 1; i < g.node_off_.size(); ++i) g.node_off_[i] += g.node_off_[i - 1];
    g.node_edges_.resize(g.edge_nodes_.size());
    std::vector<std::uint64_t> cursor(g.node_off_.begin(), g.node_off_.end() - 1);
    for (std::size_t e = 0; e < n_edges; ++e)
        for (std::uint64_t k = g.edge_off_[e]; k < g.edge_off_[e + 1]; ++k)
            g.node_edges_[cursor[g.edge_nodes_[k]]++] = static_cast<std::uint32_t>(e);

    g.cutoff_tag_ = slice.cutoff().to_string();
    g.source_records_ = slice.size();
    return g;
}

std::optional<std::uint32_t> Hypergraph::node_id(std::string_view token) const {
    auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
    if (it == tokens_.end() || *it != token) return std::nullopt;
    return static_cast<std::uint32_t>(it - tokens_.begin());
}

GraphStats Hypergraph::stats() const {
    GraphStats s;
    s.nodes = tokens_.size();
    s.hyperedges = edge_count();
    s.incidences = edge_nodes_.size();
    for (EntityKind k : kinds_)
        (k == EntityKind::Author ? s.author_nodes : s.concept_nodes) += 1;
    return s;
}

DistanceVector Hypergraph::spd_from(std::uint32_t source) const {
    if (source >= tokens_.size()) throw DataError("spd_from: unknown source node");
    DistanceVector dv;
    dv.source = source;
    dv.dist.assign(tokens_.size(), kUnreachable);
    dv.dist[source] = 0;

    std::vector<bool> edge_seen(edge_count(), false);
    std::vector<std::uint32_t> frontier{source}, next;
    std::uint32_t depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (std::uint32_t u : frontier) {
            for (std::uint64_t k = node_off_[u]; k < node_off_[u + 1]; ++k) {
                std::uint32_t e = node_edges_[k];
                if (edge_seen[e]) continue;
                edge_seen[e] = true;
                for (std::uint64_t m = edge_off_[e]; m < edge_off_[e + 1]; ++m) {
                    std::uint32_t v = edge_nodes_[m];
                    if (dv.dist[v] == kUnreachable) {
                        dv.dist[v] = depth;
                        next.push_back(v);
                    }
                }
            }
        }
        frontier.swap(next);
    }
    return dv;
}

DistanceVector Hypergraph::spd_from(std::string_view source_token) const {
    auto id = node_id(source_token);
    if (!id) throw DataError("spd_from: unknown source node '" + std::string(source_token) + "'");
    return spd_from(*id);
}

SpdHistogram Hypergraph::spd_histogram(std::string_view property,
                                       const std::vector<std::string>& targets) const {
    auto prop = node_id(property);
    if (!prop) throw DataError("spd_histogram: property not in graph");
    DistanceVector dv = spd_from(*prop);
    SpdHistogram h;
    for (const auto& t : targets) {
        auto id = node_id(t);
        if (!id) {
            ++h.missing_from_graph;
            continue;
        }
        std::uint32_t d = dv.dist[*id];
        if (d == kUnreachable)
            ++h.unreachable;
        else
            ++h.counts[d];
    }
    return h;
}

namespace {

constexpr char kMagic[4] = {'H', 'C', 'G', '1'};

template <typename T>
void write_pod(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void write_vec(std::ofstream& out, const std::vector<T>& v) {
    write_pod(out, static_cast<std::uint64_t>(v.size()));
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
void read_pod(std::ifstream& in, T& v, const std::string& path) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw DataError("graph cache truncated: " + path);
}

template <typename T>
void read_vec(std::ifstream& in, std::vector<T>& v, std::uint64_t expect,
              const std::string& path) {
    std::uint64_t n = 0;
    read_pod(in, n, path);
    if (n != expect) throw DataError("graph cache count mismatch: " + path);
    v.resize(n);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T)));
    if (!in) throw DataError("graph cache truncated: " + path);
}

void write_string(std::ofstream& out, const std::string& s) {
    write_pod(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::ifstream& in, const std::string& path) {
    std::uint32_t n = 0;
    read_pod(in, n, path);
    std::string s(n, '\0');
    in.read(s.data(), n);
    if (!in) throw DataError("graph cache truncated: " + path);
    return s;
}

}  // namespace

void Hypergraph::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write graph cache: " + path);
    out.write(kMagic, 4);
    write_pod(out, static_cast<std::uint64_t>(tokens_.size()));
    write_pod(out, static_cast<std::uint64_t>(edge_count()));
    write_pod(out, static_cast<std::uint64_t>(edge_nodes_.size()));
    write_string(out, cutoff_tag_);
    write_pod(out, source_records_);
    for (const auto& t : tokens_) write_string(out, t);
    std::vector<std::uint8_t> kind_bytes(kinds_.size());
    for (std::size_t i = 0; i < kinds_.size(); ++i)
        kind_bytes[i] = static_cast<std::uint8_t>(kinds_[i]);
    write_vec(out, kind_bytes);
    write_vec(out, node_off_);
    write_vec(out, node_edges_);
    write_vec(out, edge_off_);
    write_vec(out, edge_nodes_);
    if (!out) throw DataError("failed writing graph cache: " + path);
}

Hypergraph Hypergraph::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open graph cache: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw DataError("not a graph cache (bad magic): " + path);
    std::uint64_t n_nodes = 0, n_edges = 0, n_inc = 0;
    read_pod(in, n_nodes, path);
    read_pod(in, n_edges, path);
    read_pod(in, n_inc, path);

    Hypergraph g;
    g.cutoff_tag_ = read_string(in, path);
    read_pod(in, g.source_records_, path);
    g.tokens_.reserve(n_nodes);
    for (std::uint64_t i = 0; i < n_nodes; ++i) g.tokens_.push_back(read_string(in, path));
    std::vector<std::uint8_t> kind_bytes;
    read_vec(in, kind_bytes, n_nodes, path);
    g.kinds_.resize(n_nodes);
    for (std::size_t i = 0; i < kind_bytes.size(); ++i) {
        if (kind_bytes[i] > 1) throw DataError("graph cache corrupt (bad kind): " + path);
        g.kinds_[i] = static_cast<EntityKind>(kind_bytes[i]);
    }
    read_vec(in, g.node_off_, n_nodes + 1, path);
    read_vec(in, g.node_edges_, n_inc, path);
    read_vec(in, g.edge_off_, n_edges + 1, path);
    read_vec(in, g.edge_nodes_, n_inc, path);

    if (g.node_off_.back() != n_inc || g.edge_off_.back() != n_inc)
        throw DataError("graph cache count mismatch: " + path);
    for (std::uint32_t e : g.node_edges_)
        if (e >= n_edges) throw DataError("graph cache corrupt (edge id out of range): " + path);
    for (std::uint32_t v : g.edge_nodes_)
        if (v >= n_nodes) throw DataError("graph cache corrupt (node id out of range): " + path);
    return g;
}

}  // namespace hypogen
