#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hypogen/date.hpp"

namespace hypogen {

enum class EntityKind : std::uint8_t { Author, Concept };

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

// Token <-> dense entity id bijection. A token is either an author or a
// concept, never both.
class Vocabulary {
public:
    std::uint32_t intern(std::string_view token, EntityKind kind);
    std::optional<std::uint32_t> find(std::string_view token) const;
    const std::string& token(std::uint32_t id) const { return tokens_[id]; }
    EntityKind kind(std::uint32_t id) const { return kinds_[id]; }
    std::size_t size() const { return tokens_.size(); }

private:
    std::vector<std::string> tokens_;
    std::vector<EntityKind> kinds_;
    std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> index_;
};

// One publication. Author/concept lists hold vocabulary ids, deduplicated
// in first-occurrence order.
struct PaperRecord {
    std::string paper_id;
    Date date;
    std::vector<std::uint32_t> authors;
    std::vector<std::uint32_t> concepts;
};

// Maps corpus file field names onto the record fields.
struct FieldSchema {
    std::string id = "id";
    std::string date = "date";
    std::string authors = "authors";
    std::string concepts = "concepts";
};

// alias -> canonical concept token, applied at ingestion.
using AliasTable = std::unordered_map<std::string, std::string>;

// Loaded from CSV with header "alias,canonical".
AliasTable load_alias_table(const std::string& path);

class Corpus {
public:
    const std::vector<PaperRecord>& records() const { return records_; }
    const Vocabulary& vocab() const { return vocab_; }

    // Construction paths; both validate invariants (unique paper ids,
    // disjoint author/concept kinds).
    static Corpus from_records(std::vector<std::string> ids, std::vector<Date> dates,
                               std::vector<std::vector<std::string>> authors,
                               std::vector<std::vector<std::string>> concepts,
                               const AliasTable& aliases = {});

private:
    friend Corpus load_corpus(const std::string&, const FieldSchema&, const AliasTable&);
    std::vector<PaperRecord> records_;
    Vocabulary vocab_;
};

// Newline-delimited JSON records. Errors carry the offending line number.
Corpus load_corpus(const std::string& path, const FieldSchema& schema = {},
                   const AliasTable& aliases = {});

// Immutable view of the records dated strictly before the cutoff.
class CorpusSlice {
public:
    CorpusSlice(const Corpus& corpus, std::vector<std::uint32_t> record_indices, Date cutoff)
        : corpus_(&corpus), indices_(std::move(record_indices)), cutoff_(cutoff) {}

    const Corpus& corpus() const { return *corpus_; }
    const Date& cutoff() const { return cutoff_; }
    std::size_t size() const { return indices_.size(); }
    const PaperRecord& record(std::size_t i) const { return corpus_->records()[indices_[i]]; }
    const std::vector<std::uint32_t>& indices() const { return indices_; }

private:
    const Corpus* corpus_;
    std::vector<std::uint32_t> indices_;
    Date cutoff_;
};

CorpusSlice slice_before(const Corpus& corpus, Date cutoff);
CorpusSlice slice_before(const CorpusSlice& slice, Date cutoff);

// Candidate pool for one property: concepts never co-mentioned with the
// property anywhere in the slice, seen in at least `min_mentions` records
// within the `window_years` years before the cutoff.
struct CandidateSet {
    std::string property;
    std::vector<std::string> candidates;  // sorted token order
    int window_years = 5;
    int min_mentions = 1;
};

CandidateSet extract_candidates(const CorpusSlice& slice, const std::string& property,
                                int window_years = 5, int min_mentions = 1);

}  // namespace hypogen
