#include "interest/recipe.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace interest {

namespace {

[[noreturn]] void fail_at(const std::string& source, std::size_t line_no,
                          const std::string& message) {
    throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + message);
}

bool is_plantable_term(const std::string& term) {
    if (term.empty()) return false;
    for (const char c : term) {
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
    }
    return true;
}

std::size_t digit_width(std::size_t n) {
    std::size_t width = 1;
    while (n >= 10) {
        n /= 10;
        ++width;
    }
    return width;
}

std::string zero_pad(std::size_t value, std::size_t width) {
    std::string digits = std::to_string(value);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return digits;
}

class LineParser {
public:
    LineParser(const std::string& source, std::size_t line_no, std::vector<std::string> words)
        : source_(source), line_no_(line_no), words_(std::move(words)) {}

    const std::string& word(std::size_t i) const { return words_.at(i); }
    std::size_t arg_count() const { return words_.size() - 1; }

    void expect_args(std::size_t n) const {
        if (arg_count() != n) {
            fail_at(source_, line_no_,
                    "directive '" + words_[0] + "' expects " + std::to_string(n) +
                        " argument(s), got " + std::to_string(arg_count()));
        }
    }

    std::int64_t integer(std::size_t i, std::int64_t min_value) const {
        std::int64_t value = 0;
        try {
            std::size_t consumed = 0;
            value = std::stoll(word(i), &consumed);
            if (consumed != word(i).size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            fail_at(source_, line_no_, "expected an integer, got '" + word(i) + "'");
        }
        if (value < min_value) {
            fail_at(source_, line_no_,
                    "value " + word(i) + " must be >= " + std::to_string(min_value));
        }
        return value;
    }

    std::string term(std::size_t i) const {
        if (!is_plantable_term(word(i))) {
            fail_at(source_, line_no_,
                    "'" + word(i) + "' must be lowercase ASCII letters/digits");
        }
        return word(i);
    }

    // Parses a 1-based range list like "1,5,9-12" into 0-based indices.
    std::vector<std::size_t> range(std::size_t i, std::size_t doc_count) const {
        std::vector<std::size_t> docs;
        std::stringstream segments(word(i));
        std::string segment;
        while (std::getline(segments, segment, ',')) {
            if (segment.empty()) fail_at(source_, line_no_, "empty range segment");
            std::size_t first = 0;
            std::size_t last = 0;
            const auto dash = segment.find('-');
            try {
                if (dash == std::string::npos) {
                    first = last = std::stoull(segment);
                } else {
                    first = std::stoull(segment.substr(0, dash));
                    last = std::stoull(segment.substr(dash + 1));
                }
            } catch (const std::exception&) {
                fail_at(source_, line_no_, "malformed range '" + segment + "'");
            }
            if (first < 1 || last < first || last > doc_count) {
                fail_at(source_, line_no_,
                        "range '" + segment + "' is outside 1.." + std::to_string(doc_count));
            }
            for (std::size_t index = first; index <= last; ++index) {
                docs.push_back(index - 1);
            }
        }
        if (docs.empty()) fail_at(source_, line_no_, "empty document range");
        return docs;
    }

private:
    const std::string& source_;
    std::size_t line_no_;
    std::vector<std::string> words_;
};

}  // namespace

Recipe parse_recipe(std::istream& in, const std::string& source_name) {
    Recipe recipe;
    bool docs_declared = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> words;
        {
            std::stringstream stream(line);
            std::string word;
            while (stream >> word) {
                if (word.front() == '#') break;
                words.push_back(word);
            }
        }
        if (words.empty()) continue;
        const LineParser parser(source_name, line_no, std::move(words));
        const std::string& directive = parser.word(0);

        const auto require_docs = [&] {
            if (!docs_declared) {
                fail_at(source_name, line_no,
                        "'docs' must be declared before '" + directive + "'");
            }
        };

        if (directive == "docs") {
            parser.expect_args(1);
            if (docs_declared) fail_at(source_name, line_no, "'docs' declared twice");
            recipe.doc_count = static_cast<std::size_t>(parser.integer(1, 0));
            docs_declared = true;
        } else if (directive == "id-prefix") {
            parser.expect_args(1);
            recipe.id_prefix = parser.term(1);
        } else if (directive == "vocab") {
            parser.expect_args(2);
            recipe.vocab_size = static_cast<std::size_t>(parser.integer(1, 1));
            recipe.vocab_prefix = parser.term(2);
        } else if (directive == "title-tokens") {
            parser.expect_args(1);
            recipe.title_tokens = static_cast<std::size_t>(parser.integer(1, 0));
        } else if (directive == "fill") {
            parser.expect_args(3);
            require_docs();
            if (recipe.vocab_size == 0) {
                fail_at(source_name, line_no, "'fill' requires a prior 'vocab' directive");
            }
            Recipe::Fill fill;
            fill.docs = parser.range(1, recipe.doc_count);
            fill.min_tokens = static_cast<std::size_t>(parser.integer(2, 0));
            fill.max_tokens = static_cast<std::size_t>(parser.integer(3, 0));
            if (fill.max_tokens < fill.min_tokens) {
                fail_at(source_name, line_no, "fill max must be >= min");
            }
            recipe.fills.push_back(std::move(fill));
        } else if (directive == "plant") {
            parser.expect_args(3);
            require_docs();
            Recipe::Plant plant;
            plant.term = parser.term(1);
            plant.count = parser.integer(2, 1);
            plant.docs = parser.range(3, recipe.doc_count);
            recipe.plants.push_back(std::move(plant));
        } else if (directive == "plant-unique") {
            parser.expect_args(3);
            require_docs();
            Recipe::PlantUnique plant;
            plant.prefix = parser.term(1);
            plant.count = static_cast<std::size_t>(parser.integer(2, 1));
            plant.docs = parser.range(3, recipe.doc_count);
            recipe.plant_uniques.push_back(std::move(plant));
        } else {
            fail_at(source_name, line_no, "unknown directive '" + directive + "'");
        }
    }
    if (!docs_declared) {
        throw std::runtime_error(source_name + ": recipe is missing the 'docs' directive");
    }
    return recipe;
}

Recipe load_recipe_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    return parse_recipe(in, path.string());
}

std::vector<CorpusRecord> generate_corpus(const Recipe& recipe, std::uint64_t seed) {
    std::vector<std::vector<std::string>> doc_tokens(recipe.doc_count);
    std::mt19937_64 rng(seed);
    // Standard-library integer distributions vary between implementations;
    // modulo reduction keeps output reproducible everywhere.
    const auto draw = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    const std::size_t vocab_width = digit_width(recipe.vocab_size);
    for (const auto& fill : recipe.fills) {
        for (const std::size_t doc : fill.docs) {
            const std::size_t span = fill.max_tokens - fill.min_tokens + 1;
            const std::size_t count = fill.min_tokens + draw(span);
            for (std::size_t i = 0; i < count; ++i) {
                doc_tokens[doc].push_back(recipe.vocab_prefix +
                                          zero_pad(draw(recipe.vocab_size) + 1, vocab_width));
            }
        }
    }
    for (const auto& plant : recipe.plants) {
        for (const std::size_t doc : plant.docs) {
            for (std::int64_t i = 0; i < plant.count; ++i) {
                doc_tokens[doc].push_back(plant.term);
            }
        }
    }
    const std::size_t id_width = digit_width(recipe.doc_count == 0 ? 1 : recipe.doc_count);
    for (const auto& plant : recipe.plant_uniques) {
        const std::size_t seq_width = digit_width(plant.count);
        for (const std::size_t doc : plant.docs) {
            for (std::size_t i = 1; i <= plant.count; ++i) {
                doc_tokens[doc].push_back(plant.prefix + zero_pad(doc + 1, id_width) +
                                          zero_pad(i, seq_width));
            }
        }
    }

    std::vector<CorpusRecord> records;
    records.reserve(recipe.doc_count);
    for (std::size_t doc = 0; doc < recipe.doc_count; ++doc) {
        CorpusRecord record;
        record.id = recipe.id_prefix + zero_pad(doc + 1, id_width);
        const auto& tokens = doc_tokens[doc];
        const std::size_t title_count = std::min(recipe.title_tokens, tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            std::string& target = i < title_count ? record.title : record.summary;
            if (!target.empty()) target += " ";
            target += tokens[i];
        }
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace interest
