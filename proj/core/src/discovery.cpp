#include "interest/discovery.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace interest {

namespace {

// Re-searches with the candidate term appended and totals its occurrences
// in the verification result set.
std::int64_t verification_count(const SearchProvider& provider,
                                const std::vector<std::string>& original_query,
                                const std::string& term, std::size_t max_results) {
    std::vector<std::string> recheck_query = original_query;
    recheck_query.push_back(term);

    ResultSet verification;
    try {
        verification = provider.search(recheck_query, max_results);
    } catch (const std::exception& e) {
        throw std::runtime_error("verification of candidate '" + term +
                                 "' failed: " + e.what());
    }

    std::int64_t count = 0;
    for (const auto& doc : verification.documents()) {
        count += doc.count(term);
    }
    return count;
}

}  // namespace

Thresholds::Thresholds(std::int64_t low_threshold, std::int64_t high_threshold,
                       std::size_t max_results_limit)
    : low(low_threshold), high(high_threshold), max_results(max_results_limit) {
    if (low < 0 || high < 0) {
        throw std::invalid_argument("thresholds must be non-negative");
    }
    if (low >= high) {
        throw std::invalid_argument("low threshold must be strictly below high threshold");
    }
    if (max_results < 1) {
        throw std::invalid_argument("max_results must be >= 1");
    }
}

ResultSet local_search(const Corpus& corpus, const std::vector<std::string>& query,
                       std::size_t max_results) {
    if (query.empty()) {
        throw std::invalid_argument("local_search: query must be non-empty");
    }
    const std::set<std::string> query_terms(query.begin(), query.end());

    struct Hit {
        std::size_t matched;
        const Document* doc;
    };
    std::vector<Hit> hits;
    for (const auto& doc : corpus.documents()) {
        std::size_t matched = 0;
        for (const auto& term : query_terms) {
            if (doc.contains(term)) ++matched;
        }
        if (matched > 0) hits.push_back({matched, &doc});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        if (a.matched != b.matched) return a.matched > b.matched;
        return a.doc->id() < b.doc->id();
    });
    if (hits.size() > max_results) hits.resize(max_results);

    std::vector<Document> selected;
    selected.reserve(hits.size());
    for (const auto& hit : hits) selected.push_back(*hit.doc);
    return ResultSet(std::move(selected));
}

std::vector<CandidateWord> extract_low_frequency(const ResultSet& results,
                                                 const StopwordList& stopwords,
                                                 std::int64_t low_threshold,
                                                 const std::vector<std::string>& exclude) {
    const std::set<std::string> excluded(exclude.begin(), exclude.end());
    std::vector<CandidateWord> candidates;
    for (const auto& [term, total] : aggregate_term_counts(results)) {
        if (total > low_threshold) continue;
        if (stopwords.contains(term)) continue;
        if (excluded.count(term) != 0) continue;
        candidates.push_back({term, total});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const CandidateWord& a, const CandidateWord& b) {
                  if (a.low_count != b.low_count) return a.low_count < b.low_count;
                  return a.term < b.term;
              });
    return candidates;
}

std::optional<DiscoveredKeyword> verify_candidate(const SearchProvider& provider,
                                                  const std::vector<std::string>& original_query,
                                                  const CandidateWord& candidate,
                                                  std::int64_t high_threshold,
                                                  std::size_t max_results) {
    if (std::find(original_query.begin(), original_query.end(), candidate.term) !=
        original_query.end()) {
        throw std::invalid_argument("verify_candidate: '" + candidate.term +
                                    "' is already a query term");
    }
    const std::int64_t high_count =
        verification_count(provider, original_query, candidate.term, max_results);
    if (high_count < high_threshold) return std::nullopt;
    return DiscoveredKeyword{candidate.term, candidate.low_count, high_count};
}

DiscoveryReport discover_keywords_report(const SearchProvider& provider,
                                         const std::vector<std::string>& query,
                                         const Thresholds& thresholds,
                                         const StopwordList& stopwords) {
    if (query.empty()) {
        throw std::invalid_argument("discover_keywords: query must be non-empty");
    }
    const ResultSet initial = provider.search(query, thresholds.max_results);
    const std::vector<CandidateWord> candidates =
        extract_low_frequency(initial, stopwords, thresholds.low, query);

    DiscoveryReport report;
    report.verifications.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        const std::int64_t high_count =
            verification_count(provider, query, candidate.term, thresholds.max_results);
        const bool accepted = high_count >= thresholds.high;
        report.verifications.push_back(
            {candidate.term, candidate.low_count, high_count, accepted});
        if (accepted) {
            report.discovered.push_back({candidate.term, candidate.low_count, high_count});
        }
    }
    std::sort(report.discovered.begin(), report.discovered.end(),
              [](const DiscoveredKeyword& a, const DiscoveredKeyword& b) {
                  if (a.high_count != b.high_count) return a.high_count > b.high_count;
                  return a.term < b.term;
              });
    return report;
}

std::vector<DiscoveredKeyword> discover_keywords(const SearchProvider& provider,
                                                 const std::vector<std::string>& query,
                                                 const Thresholds& thresholds,
                                                 const StopwordList& stopwords) {
    return discover_keywords_report(provider, query, thresholds, stopwords).discovered;
}

}  // namespace interest
