#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypogen/corpus.hpp"

namespace hypogen {

// Distance sentinel for nodes with no path to the source.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct DistanceVector {
    std::uint32_t source = 0;
    std::vector<std::uint32_t> dist;  // indexed by node id, kUnreachable allowed
};

struct GraphStats {
    std::uint64_t nodes = 0;
    std::uint64_t hyperedges = 0;
    std::uint64_t incidences = 0;
    std::uint64_t author_nodes = 0;
    std::uint64_t concept_nodes = 0;
};

struct SpdHistogram {
    std::map<std::uint32_t, std::size_t> counts;  // finite distance -> count
    std::size_t unreachable = 0;
    std::size_t missing_from_graph = 0;
};

// Mixed author/concept hypergraph with one hyperedge per paper.
// Incidence lists are stored as two flat CSR arrays; immutable after build.
// Node ids follow sorted token order.
class Hypergraph {
public:
    static Hypergraph build(const CorpusSlice& slice);

    std::optional<std::uint32_t> node_id(std::string_view token) const;
    const std::string& token(std::uint32_t node) const { return tokens_[node]; }
    EntityKind kind(std::uint32_t node) const { return kinds_[node]; }

    std::size_t node_count() const { return tokens_.size(); }
    std::size_t edge_count() const { return edge_off_.empty() ? 0 : edge_off_.size() - 1; }
    GraphStats stats() const;

    // Shortest-path distance in hyperedge hops from one source node to all
    // nodes. Linear in visited incidences. Throws DataError on unknown source.
    DistanceVector spd_from(std::uint32_t source) const;
    DistanceVector spd_from(std::string_view source_token) const;

    SpdHistogram spd_histogram(std::string_view property,
                               const std::vector<std::string>& targets) const;

    // Versioned binary cache (magic "HCG1"). Loading validates counts and
    // the slice fingerprint (cutoff + record count).
    void save(const std::string& path) const;
    static Hypergraph load(const std::string& path);

    const std::string& cutoff_tag() const { return cutoff_tag_; }
    std::uint64_t source_records() const { return source_records_; }

private:
    std::vector<std::string> tokens_;  // sorted; index = node id
    std::vector<EntityKind> kinds_;
    std::vector<std::uint64_t> node_off_;       // node -> range in node_edges_
    std::vector<std::uint32_t> node_edges_;
    std::vector<std::uint64_t> edge_off_;       // edge -> range in edge_nodes_
    std::vector<std::uint32_t> edge_nodes_;
    std::string cutoff_tag_;                    // cutoff date of the source slice
    std::uint64_t source_records_ = 0;
};

}  // namespace hypogen
