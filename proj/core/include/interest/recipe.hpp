#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "interest/corpus_io.hpp"

namespace interest {

/// Declarative description of a synthetic corpus, parsed from a
/// line-oriented recipe file. One directive per line, `#` starts a comment,
/// document ranges are 1-based and written `7`, `1-60`, or `1,5,9-12`:
///
///     docs N                        document count (required, first)
///     id-prefix STR                 document ids STR + zero-padded index
///     vocab COUNT PREFIX            background vocabulary of COUNT terms
///     title-tokens N                tokens routed to the title (default 3)
///     fill RANGE MIN MAX            seeded draws from the vocabulary
///     plant TERM COUNT RANGE        TERM repeated COUNT times per doc
///     plant-unique PREFIX COUNT RANGE   COUNT fresh one-off terms per doc
///
/// Terms and prefixes must be lowercase ASCII alphanumerics so that planted
/// tokens survive re-tokenization when the generated corpus is loaded.
struct Recipe {
    struct Fill {
        std::vector<std::size_t> docs;  // 0-based
        std::size_t min_tokens = 0;
        std::size_t max_tokens = 0;
    };
    struct Plant {
        std::string term;
        std::int64_t count = 1;
        std::vector<std::size_t> docs;
    };
    struct PlantUnique {
        std::string prefix;
        std::size_t count = 1;
        std::vector<std::size_t> docs;
    };

    std::size_t doc_count = 0;
    std::string id_prefix = "doc";
    std::size_t vocab_size = 0;
    std::string vocab_prefix;
    std::size_t title_tokens = 3;
    std::vector<Fill> fills;
    std::vector<Plant> plants;
    std::vector<PlantUnique> plant_uniques;
};

/// Parses a recipe, reporting problems as "<source>:<line>: <message>".
Recipe parse_recipe(std::istream& in, const std::string& source_name = "<stream>");
Recipe load_recipe_file(const std::filesystem::path& path);

/// Expands the recipe into corpus records. Given the same recipe and seed
/// the output is identical, byte for byte, across runs and platforms: the
/// only randomness is std::mt19937_64 with modulo reduction. Fill draws
/// happen first (directive order), then plants, then plant-uniques.
std::vector<CorpusRecord> generate_corpus(const Recipe& recipe, std::uint64_t seed);

}  // namespace interest
