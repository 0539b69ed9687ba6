#include "hypogen/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "hypogen/errors.hpp"

namespace hypogen {

std::uint32_t Vocabulary::intern(std::string_view token, EntityKind kind) {
    if (auto it = index_.find(token); it != index_.end()) {
        std::uint32_t id = it->second;
        if (kinds_[id] != kind)
            throw DataError("token '" + std::string(token) +
                            "' appears as both author and concept");
        return id;
    }
    auto id = static_cast<std::uint32_t>(tokens_.size());
    tokens_.emplace_back(token);
    kinds_.push_back(kind);
    index_.emplace(tokens_.back(), id);
    return id;
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view token) const {
    if (auto it = index_.find(token); it != index_.end()) return it->second;
    return std::nullopt;
}

AliasTable load_alias_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open alias table: " + path);
    AliasTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line == "alias,canonical") continue;
        auto comma = line.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 >= line.size())
            throw DataError(path + ":" + std::to_string(lineno) + ": expected 'alias,canonical'");
        table[line.substr(0, comma)] = line.substr(comma + 1);
    }
    return table;
}

namespace {

const std::string& canonical(const std::string& token, const AliasTable& aliases) {
    auto it = aliases.find(token);
    return it == aliases.end() ? token : it->second;
}

// Interns tokens, applying aliases to concepts and dropping duplicates
// while keeping first-occurrence order.
std::vector<std::uint32_t> intern_tokens(Vocabulary& vocab, const std::vector<std::string>& raw,
                                         EntityKind kind, const AliasTable& aliases) {
    std::vector<std::uint32_t> out;
    out.reserve(raw.size());
    for (const auto& tok : raw) {
        const std::string& t = kind == EntityKind::Concept ? canonical(tok, aliases) : tok;
        std::uint32_t id = vocab.intern(t, kind);
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
    return out;
}

}  // namespace

Corpus Corpus::from_records(std::vector<std::string> ids, std::vector<Date> dates,
                            std::vector<std::vector<std::string>> authors,
                            std::vector<std::vector<std::string>> concepts,
                            const AliasTable& aliases) {
    if (ids.size() != dates.size() || ids.size() != authors.size() ||
        ids.size() != concepts.size())
        throw DataError("from_records: column length mismatch");
    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!seen_ids.insert(ids[i]).second)
            throw DataError("duplicate paper_id '" + ids[i] + "'");
        PaperRecord rec;
        rec.paper_id = std::move(ids[i]);
        rec.date = dates[i];
        rec.authors = intern_tokens(corpus.vocab_, authors[i], EntityKind::Author, aliases);
        rec.concepts = intern_tokens(corpus.vocab_, concepts[i], EntityKind::Concept, aliases);
        corpus.records_.push_back(std::move(rec));
    }
    return corpus;
}

Corpus load_corpus(const std::string& path, const FieldSchema& schema,
                   const AliasTable& aliases) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus file: " + path);

    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(where + ": malformed record: " + e.what());
        }
        if (!obj.is_object()) throw DataError(where + ": record is not an object");
        for (const auto* field : {&schema.id, &schema.date, &schema.authors, &schema.concepts})
            if (!obj.contains(*field))
                throw DataError(where + ": missing field '" + *field + "'");

        PaperRecord rec;
        try {
            rec.paper_id = obj[schema.id].get<std::string>();
            rec.date = Date::parse(obj[schema.date].get<std::string>());
            auto raw_authors = obj[schema.authors].get<std::vector<std::string>>();
            auto raw_concepts = obj[schema.concepts].get<std::vector<std::string>>();
            rec.authors =
                intern_tokens(corpus.vocab_, raw_authors, EntityKind::Author, aliases);
            rec.concepts =
                intern_tokens(corpus.vocab_, raw_concepts, EntityKind::Concept, aliases);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(where + ": malformed record: " + e.what());
        } catch (const DataError& e) {
            throw DataError(where + ": " + e.what());
        }
        if (!seen_ids.insert(rec.paper_id).second)
            throw DataError(where + ": duplicate paper_id '" + rec.paper_id + "'");
        corpus.records_.push_back(std::move(rec));
    }
    return corpus;
}

CorpusSlice slice_before(const Corpus& corpus, Date cutoff) {
    std::vector<std::uint32_t> idx;
    const auto& recs = corpus.records();
    for (std::uint32_t i = 0; i < recs.size(); ++i)
        if (recs[i].date < cutoff) idx.push_back(i);
    return CorpusSlice(corpus, std::move(idx), cutoff);
}

CorpusSlice slice_before(const CorpusSlice& slice, Date cutoff) {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i : slice.indices())
        if (slice.corpus().records()[i].date < cutoff) idx.push_back(i);
    return CorpusSlice(slice.corpus(), std::move(idx), cutoff);
}

CandidateSet extract_candidates(const CorpusSlice& slice, const std::string& property,
                                int window_years, int min_mentions) {
    const Vocabulary& vocab = slice.corpus().vocab();
    auto prop_id = vocab.find(property);
    if (!prop_id || vocab.kind(*prop_id) != EntityKind::Concept)
        throw DataError("property token unknown: '" + property + "'");
    if (window_years <= 0) throw DataError("window_years must be positive");
    if (min_mentions <= 0) throw DataError("min_mentions must be positive");

    const Date window_start = slice.cutoff().minus_years(window_years);

    std::unordered_map<std::uint32_t, int> window_mentions;
    std::unordered_set<std::uint32_t> studied;  // co-occurs with property in the slice
    for (std::size_t i = 0; i < slice.size(); ++i) {
        const PaperRecord& rec = slice.record(i);
        bool has_property =
            std::find(rec.concepts.begin(), rec.concepts.end(), *prop_id) != rec.concepts.end();
        bool in_window = rec.date >= window_start;
        for (std::uint32_t c : rec.concepts) {
            if (c == *prop_id) continue;
            if (has_property) studied.insert(c);
            if (in_window) ++window_mentions[c];
        }
    }

    std::set<std::string> sorted;
    for (const auto& [c, n] : window_mentions)
        if (n >= min_mentions && !studied.contains(c)) sorted.insert(vocab.token(c));

    CandidateSet out;
    out.property = property;
    out.candidates.assign(sorted.begin(), sorted.end());
    out.window_years = window_years;
    out.min_mentions = min_mentions;
    return out;
}

}  // namespace hypogen
