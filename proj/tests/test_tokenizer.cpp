#include <doctest.h>

#include <stdexcept>

#include <random>
#include <string>
#include <vector>

#include "interest/tokenizer.hpp"

using interest::StopwordList;
using interest::TokenizerConfig;
using interest::tokenize;

namespace {
const StopwordList kNoStopwords;
}

TEST_CASE("tokenize splits on non-alphanumerics and lowercases") {
    const TokenizerConfig config;
    CHECK(tokenize("Euro 2008 Results!", config, kNoStopwords) ==
          std::vector<std::string>{"euro", "2008", "results"});
    CHECK(tokenize("one,two;three--four", config, kNoStopwords) ==
          std::vector<std::string>{"one", "two", "three", "four"});
}

TEST_CASE("tokenize of empty or all-separator text yields nothing") {
    const TokenizerConfig config;
    CHECK(tokenize("", config, kNoStopwords).empty());
    CHECK(tokenize("... !!! ---", config, kNoStopwords).empty());
}

TEST_CASE("tokenize strips stopwords case-insensitively") {
    TokenizerConfig config;
    config.min_token_len = 1;
    const StopwordList stops{"the"};
    CHECK(tokenize("The the THE", config, stops).empty());
    CHECK(tokenize("the quick fox", config, stops) ==
          std::vector<std::string>{"quick", "fox"});
}

TEST_CASE("stopword stripping can be disabled") {
    TokenizerConfig config;
    config.strip_stopwords = false;
    const StopwordList stops{"the"};
    CHECK(tokenize("the fox", config, stops) == std::vector<std::string>{"the", "fox"});
}

TEST_CASE("min_token_len drops short tokens") {
    TokenizerConfig config;  // default minimum is 2
    CHECK(tokenize("a bb ccc", config, kNoStopwords) == std::vector<std::string>{"bb", "ccc"});
    config.min_token_len = 1;
    CHECK(tokenize("a bb ccc", config, kNoStopwords) ==
          std::vector<std::string>{"a", "bb", "ccc"});
}

TEST_CASE("min_token_len below 1 is rejected") {
    TokenizerConfig config;
    config.min_token_len = 0;
    CHECK_THROWS_AS(tokenize("anything", config, kNoStopwords), std::invalid_argument);
}

TEST_CASE("lowercasing can be disabled") {
    TokenizerConfig config;
    config.lowercase = false;
    CHECK(tokenize("AbC dEf", config, kNoStopwords) == std::vector<std::string>{"AbC", "dEf"});
}

TEST_CASE("latin-1 letters fold and count as word codepoints") {
    const TokenizerConfig config;
    CHECK(tokenize("Caf\xC3\xA9 M\xC3\x9CLLER", config, kNoStopwords) ==
          std::vector<std::string>{"caf\xC3\xA9", "m\xC3\xBCller"});
    // Multiplication sign is uppercase-range adjacent but must not shift.
    CHECK(interest::lowercase_text("A\xC3\x97Z") == "a\xC3\x97z");
}

TEST_CASE("invalid utf-8 bytes act as separators") {
    const TokenizerConfig config;
    const std::string text = std::string("ab") + char(0xFF) + "cd";
    CHECK(tokenize(text, config, kNoStopwords) == std::vector<std::string>{"ab", "cd"});
}

TEST_CASE("tokenize is deterministic and idempotent on its own output") {
    TokenizerConfig config;
    config.min_token_len = 1;
    const StopwordList stops{"the", "of"};
    const std::string charset = "abcXYZ 012.,!-";
    std::mt19937 rng(20240811);
    for (int iteration = 0; iteration < 300; ++iteration) {
        std::string text;
        const std::size_t length = rng() % 60;
        for (std::size_t i = 0; i < length; ++i) text += charset[rng() % charset.size()];
        if (rng() % 3 == 0) text += "\xC3\xA9";  // sprinkle some UTF-8

        const auto tokens = tokenize(text, config, stops);
        CHECK(tokenize(text, config, stops) == tokens);

        std::string joined;
        for (const auto& token : tokens) {
            if (!joined.empty()) joined += " ";
            joined += token;
        }
        CHECK(tokenize(joined, config, stops) == tokens);
    }
}

TEST_CASE("stopword list membership folds case") {
    const StopwordList stops{"The", "AND"};
    CHECK(stops.contains("the"));
    CHECK(stops.contains("tHe"));
    CHECK(stops.contains("and"));
    CHECK_FALSE(stops.contains("fox"));
    CHECK(stops.size() == 2);
}

TEST_CASE("built-in english list knows common trivia words") {
    const StopwordList stops = StopwordList::default_english();
    CHECK(stops.contains("the"));
    CHECK(stops.contains("and"));
    CHECK(stops.contains("of"));
    CHECK_FALSE(stops.contains("zephyr"));
}
