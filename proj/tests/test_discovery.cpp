#include <doctest.h>

#include <stdexcept>

#include <set>
#include <string>
#include <vector>

#include "interest/composition.hpp"
#include "interest/corpus_io.hpp"
#include "interest/discovery.hpp"
#include "interest/recipe.hpp"

#include "cli_helpers.hpp"

using namespace interest;

namespace {

Document make_doc(const std::string& id, const std::vector<std::string>& tokens) {
    return Document(id, "", "", tokens);
}

struct FailingProvider final : SearchProvider {
    ResultSet search(const std::vector<std::string>&, std::size_t) const override {
        throw std::runtime_error("backend down");
    }
};

// The deterministic fixture behind the discovery tests; see the recipe file
// for the construction.
struct DiscoveryFixture {
    Corpus corpus;
    LocalSearchProvider provider;
    StopwordList stopwords;
    std::vector<std::string> query;

    DiscoveryFixture()
        : corpus(corpus_from_records(
              generate_corpus(load_recipe_file(fixture_path("discovery.recipe")), 5),
              TokenizerConfig{}, StopwordList::default_english())),
          provider(corpus),
          stopwords(StopwordList::default_english()),
          query({"alpha", "beta", "gamma"}) {}
};

}  // namespace

TEST_CASE("thresholds enforce low < high and a positive sample size") {
    CHECK_THROWS_AS(Thresholds(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Thresholds(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Thresholds(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Thresholds(0, -1), std::invalid_argument);
    CHECK_THROWS_AS(Thresholds(1, 20, 0), std::invalid_argument);
    const Thresholds t(1, 20);
    CHECK(t.low == 1);
    CHECK(t.high == 20);
    CHECK(t.max_results == 100);
}

TEST_CASE("local_search orders by distinct query terms matched, then id") {
    const Corpus corpus = build_corpus({
        make_doc("d1", {"a", "b"}),
        make_doc("d2", {"a"}),
        make_doc("d3", {"x"}),
    });
    const auto hits = local_search(corpus, {"a", "b"}, 10);
    REQUIRE(hits.size() == 2);
    CHECK(hits.at(0).id() == "d1");
    CHECK(hits.at(1).id() == "d2");

    CHECK(local_search(corpus, {"z"}, 10).empty());

    const auto truncated = local_search(corpus, {"a", "b"}, 1);
    REQUIRE(truncated.size() == 1);
    CHECK(truncated.at(0).id() == "d1");
}

TEST_CASE("local_search rejects an empty query") {
    const Corpus corpus = build_corpus({make_doc("d1", {"a"})});
    CHECK_THROWS_AS(local_search(corpus, {}, 10), std::invalid_argument);
}

TEST_CASE("extract_low_frequency keeps only rare non-stopwords") {
    std::vector<std::string> tokens{"reef"};
    for (int i = 0; i < 40; ++i) tokens.push_back("water");
    for (int i = 0; i < 37; ++i) tokens.push_back("swim");
    const ResultSet results = build_corpus({make_doc("r1", tokens)});
    const StopwordList stopwords;

    const auto candidates = extract_low_frequency(results, stopwords, 1);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].term == "reef");
    CHECK(candidates[0].low_count == 1);

    CHECK(extract_low_frequency(results, stopwords, 0).empty());
}

TEST_CASE("extract_low_frequency breaks count ties by term") {
    const ResultSet results = build_corpus({make_doc("r1", {"bb", "aa"})});
    const auto candidates = extract_low_frequency(results, StopwordList{}, 1);
    REQUIRE(candidates.size() == 2);
    CHECK(candidates[0].term == "aa");
    CHECK(candidates[1].term == "bb");
}

TEST_CASE("extract_low_frequency drops stopwords and excluded terms") {
    const ResultSet results = build_corpus({make_doc("r1", {"the", "rare", "query"})});
    const StopwordList stopwords{"the"};
    const auto candidates = extract_low_frequency(results, stopwords, 1, {"query"});
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].term == "rare");
}

TEST_CASE("verify_candidate accepts when the re-search count clears the bar") {
    // Re-searching with the candidate pulls in 30 documents carrying it
    // twice each.
    std::vector<Document> docs;
    for (int i = 1; i <= 30; ++i) {
        docs.push_back(make_doc("v" + std::to_string(i), {"comet", "comet"}));
    }
    docs.push_back(make_doc("s1", {"sun"}));
    const LocalSearchProvider provider(build_corpus(std::move(docs)));

    const auto accepted = verify_candidate(provider, {"sun"}, {"comet", 1}, 20, 100);
    REQUIRE(accepted.has_value());
    CHECK(accepted->term == "comet");
    CHECK(accepted->low_count == 1);
    CHECK(accepted->high_count == 60);
}

TEST_CASE("verify_candidate rejects a candidate that stays rare") {
    std::vector<Document> docs;
    docs.push_back(make_doc("s1", {"sun"}));
    docs.push_back(make_doc("s2", {"sun", "pearl"}));
    docs.push_back(make_doc("s3", {"pearl", "pearl"}));
    const LocalSearchProvider provider(build_corpus(std::move(docs)));

    CHECK_FALSE(verify_candidate(provider, {"sun"}, {"pearl", 1}, 20, 100).has_value());
}

TEST_CASE("a zero high threshold accepts every candidate") {
    const LocalSearchProvider provider(build_corpus({make_doc("s1", {"sun"})}));
    const auto accepted = verify_candidate(provider, {"sun"}, {"ghost", 1}, 0, 100);
    REQUIRE(accepted.has_value());
    CHECK(accepted->high_count == 0);
}

TEST_CASE("verify_candidate rejects candidates that are query terms") {
    const LocalSearchProvider provider(build_corpus({make_doc("s1", {"sun"})}));
    CHECK_THROWS_AS(verify_candidate(provider, {"sun"}, {"sun", 1}, 0, 100),
                    std::invalid_argument);
}

TEST_CASE("provider failures carry the candidate term") {
    const FailingProvider provider;
    try {
        verify_candidate(provider, {"sun"}, {"pearl", 1}, 5, 100);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        const std::string message = e.what();
        CHECK(message.find("pearl") != std::string::npos);
        CHECK(message.find("backend down") != std::string::npos);
    }
}

TEST_CASE("discover_keywords finds exactly the planted term") {
    const DiscoveryFixture fixture;
    const Thresholds thresholds(1, 20, 100);

    const auto discovered =
        discover_keywords(fixture.provider, fixture.query, thresholds, fixture.stopwords);
    REQUIRE(discovered.size() == 1);
    CHECK(discovered[0].term == "zephyr");
    CHECK(discovered[0].low_count == 1);
    CHECK(discovered[0].high_count == 81);

    // Every output satisfies both poles.
    for (const auto& keyword : discovered) {
        CHECK(keyword.low_count <= thresholds.low);
        CHECK(keyword.high_count >= thresholds.high);
    }

    // Determinism.
    const auto again =
        discover_keywords(fixture.provider, fixture.query, thresholds, fixture.stopwords);
    REQUIRE(again.size() == discovered.size());
    CHECK(again[0].term == discovered[0].term);
    CHECK(again[0].high_count == discovered[0].high_count);
}

TEST_CASE("discovered keywords are a subset of the extracted candidates") {
    const DiscoveryFixture fixture;
    const Thresholds thresholds(1, 20, 100);

    const ResultSet initial = fixture.provider.search(fixture.query, thresholds.max_results);
    std::set<std::string> candidate_terms;
    for (const auto& candidate :
         extract_low_frequency(initial, fixture.stopwords, thresholds.low, fixture.query)) {
        candidate_terms.insert(candidate.term);
    }
    for (const auto& keyword :
         discover_keywords(fixture.provider, fixture.query, thresholds, fixture.stopwords)) {
        CHECK(candidate_terms.count(keyword.term) == 1);
    }
}

TEST_CASE("brute force confirms no other term passes both thresholds") {
    const DiscoveryFixture fixture;
    const std::int64_t low_threshold = 1;
    const std::int64_t high_threshold = 20;

    const ResultSet initial = fixture.provider.search(fixture.query, 100);
    const TermCounts initial_counts = aggregate_term_counts(initial);
    const std::set<std::string> query_terms(fixture.query.begin(), fixture.query.end());

    std::set<std::string> passing;
    for (const auto& term : fixture.corpus.vocabulary()) {
        if (fixture.stopwords.contains(term)) continue;
        if (query_terms.count(term) != 0) continue;
        const auto it = initial_counts.find(term);
        if (it == initial_counts.end() || it->second > low_threshold) continue;

        std::vector<std::string> recheck = fixture.query;
        recheck.push_back(term);
        std::int64_t verification = 0;
        for (const auto& doc : local_search(fixture.corpus, recheck, 100).documents()) {
            verification += doc.count(term);
        }
        if (verification >= high_threshold) passing.insert(term);
    }
    CHECK(passing == std::set<std::string>{"zephyr"});
}

TEST_CASE("no low-frequency terms means nothing to discover") {
    const Corpus corpus = build_corpus({
        make_doc("d1", {"aa", "bb"}),
        make_doc("d2", {"aa", "bb"}),
        make_doc("d3", {"aa", "bb"}),
    });
    const LocalSearchProvider provider(corpus);
    CHECK(discover_keywords(provider, {"aa"}, Thresholds(1, 20), StopwordList{}).empty());
}

TEST_CASE("the pipeline built via compose matches discover_keywords") {
    const DiscoveryFixture fixture;
    const Thresholds thresholds(1, 20, 100);

    const auto unexpectedness = [&](const ResultSet& results) {
        return extract_low_frequency(results, fixture.stopwords, thresholds.low, fixture.query);
    };
    const auto relevance = [&](const std::vector<CandidateWord>& candidates) {
        std::vector<DiscoveredKeyword> accepted;
        for (const auto& candidate : candidates) {
            if (const auto keyword = verify_candidate(fixture.provider, fixture.query,
                                                      candidate, thresholds.high,
                                                      thresholds.max_results)) {
                accepted.push_back(*keyword);
            }
        }
        std::sort(accepted.begin(), accepted.end(),
                  [](const DiscoveredKeyword& a, const DiscoveredKeyword& b) {
                      if (a.high_count != b.high_count) return a.high_count > b.high_count;
                      return a.term < b.term;
                  });
        return accepted;
    };

    const auto pipeline = compose(relevance, unexpectedness);
    const auto via_pipeline =
        pipeline.evaluate(fixture.provider.search(fixture.query, thresholds.max_results));
    const auto direct =
        discover_keywords(fixture.provider, fixture.query, thresholds, fixture.stopwords);

    REQUIRE(via_pipeline.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(via_pipeline[i].term == direct[i].term);
        CHECK(via_pipeline[i].low_count == direct[i].low_count);
        CHECK(via_pipeline[i].high_count == direct[i].high_count);
    }
}

TEST_CASE("running the high check first yields a different set") {
    // Swapped order: verify every initial term first, then apply the
    // low-frequency test to the counts the verification stage produced.
    // The planted term passes the low threshold only before re-searching
    // (1 occurrence initially, 81 afterwards), so the swapped pipeline
    // loses it and returns nothing.
    const DiscoveryFixture fixture;
    const std::int64_t low_threshold = 1;
    const std::int64_t high_threshold = 20;

    const ResultSet initial = fixture.provider.search(fixture.query, 100);
    const std::set<std::string> query_terms(fixture.query.begin(), fixture.query.end());

    std::set<std::string> swapped_result;
    for (const auto& term : initial.vocabulary()) {
        if (fixture.stopwords.contains(term)) continue;
        if (query_terms.count(term) != 0) continue;
        std::vector<std::string> recheck = fixture.query;
        recheck.push_back(term);
        std::int64_t verification = 0;
        for (const auto& doc : fixture.provider.search(recheck, 100).documents()) {
            verification += doc.count(term);
        }
        if (verification >= high_threshold && verification <= low_threshold) {
            swapped_result.insert(term);
        }
    }

    std::set<std::string> discovered_terms;
    for (const auto& keyword : discover_keywords(fixture.provider, fixture.query,
                                                 Thresholds(low_threshold, high_threshold, 100),
                                                 fixture.stopwords)) {
        discovered_terms.insert(keyword.term);
    }
    CHECK(swapped_result.empty());
    CHECK(discovered_terms == std::set<std::string>{"zephyr"});
    CHECK(swapped_result != discovered_terms);
}
