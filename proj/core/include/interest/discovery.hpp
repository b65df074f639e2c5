#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "interest/corpus.hpp"
#include "interest/tokenizer.hpp"

namespace interest {

/// Frequency bounds for the keyword-discovery pipeline. A word is a
/// candidate when its total occurrence count in the initial result set is
/// at most `low`, and a discovered keyword when its count in the
/// verification result set is at least `high`.
struct Thresholds {
    /// Throws std::invalid_argument unless 0 <= low < high and
    /// max_results >= 1.
    Thresholds(std::int64_t low_threshold, std::int64_t high_threshold,
               std::size_t max_results_limit = 100);

    std::int64_t low;
    std::int64_t high;
    std::size_t max_results;
};

/// Behavioral contract over "regular search": given an ordered term list,
/// return at most max_results documents. Implementations must be
/// deterministic (identical query and corpus give an identical ordered
/// result set) and safe for concurrent search calls over an immutable
/// corpus.
class SearchProvider {
public:
    virtual ~SearchProvider() = default;

    virtual ResultSet search(const std::vector<std::string>& query,
                             std::size_t max_results) const = 0;
};

/// Returns documents containing at least one query term, ordered by number
/// of distinct query terms matched (descending), then id (ascending), and
/// truncated to max_results. Query terms are assumed normalized the same
/// way as the corpus. Throws std::invalid_argument on an empty query.
ResultSet local_search(const Corpus& corpus, const std::vector<std::string>& query,
                       std::size_t max_results);

/// Offline search provider over an in-memory corpus; the shipped
/// implementation of the SearchProvider extension point.
class LocalSearchProvider final : public SearchProvider {
public:
    explicit LocalSearchProvider(Corpus corpus) : corpus_(std::move(corpus)) {}

    ResultSet search(const std::vector<std::string>& query,
                     std::size_t max_results) const override {
        return local_search(corpus_, query, max_results);
    }

    const Corpus& corpus() const { return corpus_; }

private:
    Corpus corpus_;
};

struct CandidateWord {
    std::string term;
    std::int64_t low_count = 0;  // total occurrences in the initial result set
};

struct DiscoveredKeyword {
    std::string term;
    std::int64_t low_count = 0;
    std::int64_t high_count = 0;  // total occurrences in the verification result set
};

/// One verification outcome per candidate, kept for reporting whether or
/// not the candidate was accepted.
struct CandidateVerification {
    std::string term;
    std::int64_t low_count = 0;
    std::int64_t high_count = 0;
    bool discovered = false;
};

/// Unexpectedness stage: non-stopword terms of the result set whose
/// aggregate occurrence count is <= low_threshold, sorted by count
/// ascending then term ascending. Terms listed in `exclude` (typically the
/// original query) are skipped.
std::vector<CandidateWord> extract_low_frequency(const ResultSet& results,
                                                 const StopwordList& stopwords,
                                                 std::int64_t low_threshold,
                                                 const std::vector<std::string>& exclude = {});

/// Relevance stage for one candidate: re-searches with the original query
/// plus the candidate term and accepts the candidate iff its aggregate
/// occurrence count in the new result set is >= high_threshold. Provider
/// errors are propagated with the candidate term attached. Throws
/// std::invalid_argument when the candidate is already a query term.
std::optional<DiscoveredKeyword> verify_candidate(const SearchProvider& provider,
                                                  const std::vector<std::string>& original_query,
                                                  const CandidateWord& candidate,
                                                  std::int64_t high_threshold,
                                                  std::size_t max_results);

struct DiscoveryReport {
    /// Every candidate with its verification count, in extraction order.
    std::vector<CandidateVerification> verifications;
    /// Accepted keywords, sorted by high_count descending then term ascending.
    std::vector<DiscoveredKeyword> discovered;
};

/// The full pipeline: search, extract low-frequency candidates, verify each
/// by re-searching. Exactly the unexpectedness-then-relevance order; the
/// relevance stage only filters and annotates candidates, never invents
/// them.
DiscoveryReport discover_keywords_report(const SearchProvider& provider,
                                         const std::vector<std::string>& query,
                                         const Thresholds& thresholds,
                                         const StopwordList& stopwords);

std::vector<DiscoveredKeyword> discover_keywords(const SearchProvider& provider,
                                                 const std::vector<std::string>& query,
                                                 const Thresholds& thresholds,
                                                 const StopwordList& stopwords);

}  // namespace interest
