#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "interest/discovery.hpp"
#include "interest/match_mismatch.hpp"
#include "interest/recipe.hpp"
#include "interest/tfidf.hpp"
#include "interest/tokenizer.hpp"

namespace {

const char* const kRecipeText = R"(docs 500
id-prefix doc
vocab 200 word
title-tokens 3
fill 1-500 20 60
plant alpha 2 1-250
plant beta 2 1-250
plant zephyr 1 7
plant zephyr 2 251-400
plant-unique extra 3 1-50
)";

interest::Corpus benchmark_corpus() {
    std::istringstream recipe_stream(kRecipeText);
    const interest::Recipe recipe = interest::parse_recipe(recipe_stream, "bench");
    const auto records = interest::generate_corpus(recipe, 42);
    return interest::corpus_from_records(records, interest::TokenizerConfig{},
                                         interest::StopwordList{});
}

void BM_Tokenize(benchmark::State& state) {
    const std::string text =
        "The quick brown fox jumps over 13 lazy dogs, again and again; "
        "punctuation splits tokens while numbers like 2008 survive!";
    const interest::TokenizerConfig config;
    const auto stopwords = interest::StopwordList::default_english();
    for (auto _ : state) {
        benchmark::DoNotOptimize(interest::tokenize(text, config, stopwords));
    }
}
BENCHMARK(BM_Tokenize);

void BM_RankItems(benchmark::State& state) {
    const interest::Corpus corpus = benchmark_corpus();
    const interest::FieldMetadata field({"alpha", "beta", "word001", "word002", "word003"},
                                        "bench");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            interest::rank_items(field, corpus, interest::MatchMode::kCount));
    }
}
BENCHMARK(BM_RankItems);

void BM_RankKeywords(benchmark::State& state) {
    const interest::Corpus corpus = benchmark_corpus();
    const auto stopwords = interest::StopwordList::default_english();
    for (auto _ : state) {
        benchmark::DoNotOptimize(interest::rank_keywords(corpus, stopwords));
    }
}
BENCHMARK(BM_RankKeywords);

void BM_DiscoverKeywords(benchmark::State& state) {
    const interest::LocalSearchProvider provider(benchmark_corpus());
    const interest::Thresholds thresholds(1, 20, 100);
    const auto stopwords = interest::StopwordList::default_english();
    const std::vector<std::string> query = {"alpha", "beta"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            interest::discover_keywords(provider, query, thresholds, stopwords));
    }
}
BENCHMARK(BM_DiscoverKeywords);

}  // namespace

BENCHMARK_MAIN();
