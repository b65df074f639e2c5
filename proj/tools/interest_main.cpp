// interest: batch front end for the scoring library.
//
// Subcommands: rank-mm, discover, tfidf-rank, tfidf-keywords, gen-corpus.
// Every command is a pure function of its inputs and flags; output is
// deterministic (fixed-point scores with 6 decimals, LF line endings, no
// locale or timestamp dependence). Exit codes: 0 success, 2 usage or input
// error, 1 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "interest/corpus_io.hpp"
#include "interest/discovery.hpp"
#include "interest/match_mismatch.hpp"
#include "interest/recipe.hpp"
#include "interest/tfidf.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string corpus_path;
    std::string stopword_path;
    std::string output_format = "csv";
    std::size_t top_n = 0;  // 0 keeps all rows
};

void add_common_options(CLI::App& cmd, CommonOptions& options, bool with_corpus = true) {
    if (with_corpus) {
        cmd.add_option("--corpus", options.corpus_path, "Corpus file (JSON Lines)")
            ->required();
    }
    cmd.add_option("--stopwords", options.stopword_path,
                   "Stopword file; defaults to the built-in English list");
    cmd.add_option("--output", options.output_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--top", options.top_n, "Keep only the N best rows")
        ->check(CLI::PositiveNumber);
}

interest::StopwordList load_stopwords(const CommonOptions& options) {
    if (options.stopword_path.empty()) {
        return interest::StopwordList::default_english();
    }
    return interest::load_stopword_file(options.stopword_path);
}

std::string format_score(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

template <typename Row>
void truncate_rows(std::vector<Row>& rows, std::size_t top_n) {
    if (top_n > 0 && rows.size() > top_n) rows.resize(top_n);
}

// ---- rank-mm ------------------------------------------------------------

struct RankMMOptions {
    CommonOptions common;
    std::string field_path;
    std::string match_mode = "count";
};

int run_rank_mm(const RankMMOptions& options) {
    const interest::TokenizerConfig config;
    const interest::StopwordList stopwords = load_stopwords(options.common);
    const interest::Corpus corpus =
        interest::load_corpus_file(options.common.corpus_path, config, stopwords);
    const interest::FieldMetadata field =
        interest::load_field_file(options.field_path, config, stopwords);
    const interest::MatchMode mode = options.match_mode == "boolean"
                                         ? interest::MatchMode::kBoolean
                                         : interest::MatchMode::kCount;

    auto ranked = interest::rank_items(field, corpus, mode);
    truncate_rows(ranked, options.common.top_n);

    if (options.common.output_format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            const auto& item = ranked[i];
            rows.push_back({{"rank", i + 1},
                            {"id", item.id},
                            {"match", item.score.match},
                            {"mismatch", item.score.mismatch},
                            {"norm", item.score.norm},
                            {"value", item.score.value}});
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "rank,id,match,mismatch,norm,value\n";
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            const auto& item = ranked[i];
            std::cout << i + 1 << "," << csv_escape(item.id) << "," << item.score.match << ","
                      << item.score.mismatch << "," << item.score.norm << ","
                      << format_score(item.score.value) << "\n";
        }
    }
    return 0;
}

// ---- discover -----------------------------------------------------------

struct DiscoverOptions {
    CommonOptions common;
    std::string query;
    std::int64_t low_threshold = 1;
    std::int64_t high_threshold = 0;
    std::size_t max_results = 100;
    std::string histogram_path;
};

int run_discover(const DiscoverOptions& options) {
    const interest::TokenizerConfig config;
    const interest::StopwordList stopwords = load_stopwords(options.common);
    const interest::Corpus corpus =
        interest::load_corpus_file(options.common.corpus_path, config, stopwords);

    const std::vector<std::string> query = interest::tokenize(options.query, config, stopwords);
    if (query.empty()) {
        throw std::invalid_argument("query is empty after tokenization");
    }
    const interest::Thresholds thresholds(options.low_threshold, options.high_threshold,
                                          options.max_results);
    const interest::LocalSearchProvider provider(corpus);

    auto report = interest::discover_keywords_report(provider, query, thresholds, stopwords);
    truncate_rows(report.discovered, options.common.top_n);

    if (!options.histogram_path.empty()) {
        std::ofstream histogram(options.histogram_path, std::ios::binary);
        if (!histogram) {
            throw std::runtime_error("cannot open file for writing: " + options.histogram_path);
        }
        histogram << "term,count\n";
        for (const auto& verification : report.verifications) {
            histogram << csv_escape(verification.term) << "," << verification.high_count << "\n";
        }
    }

    if (options.common.output_format == "json") {
        json output;
        output["discovered"] = json::array();
        for (const auto& keyword : report.discovered) {
            output["discovered"].push_back({{"term", keyword.term},
                                            {"low_count", keyword.low_count},
                                            {"high_count", keyword.high_count}});
        }
        output["verifications"] = json::array();
        for (const auto& verification : report.verifications) {
            output["verifications"].push_back({{"term", verification.term},
                                               {"count", verification.high_count},
                                               {"discovered", verification.discovered}});
        }
        std::cout << output.dump(2) << "\n";
    } else {
        std::cout << "term,low_count,high_count\n";
        for (const auto& keyword : report.discovered) {
            std::cout << csv_escape(keyword.term) << "," << keyword.low_count << ","
                      << keyword.high_count << "\n";
        }
    }
    return 0;
}

// ---- tfidf-rank / tfidf-keywords -----------------------------------------

struct TfIdfRankOptions {
    CommonOptions common;
    std::string keywords;
};

int run_tfidf_rank(const TfIdfRankOptions& options) {
    const interest::TokenizerConfig config;
    const interest::StopwordList stopwords = load_stopwords(options.common);
    const interest::Corpus corpus =
        interest::load_corpus_file(options.common.corpus_path, config, stopwords);

    const std::vector<std::string> keywords =
        interest::tokenize(options.keywords, config, stopwords);
    if (keywords.empty()) {
        throw std::invalid_argument("keyword list is empty after tokenization");
    }

    auto ranked = interest::rank_documents(corpus, keywords);
    truncate_rows(ranked, options.common.top_n);

    if (options.common.output_format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            rows.push_back(
                {{"rank", i + 1}, {"id", ranked[i].id}, {"score", ranked[i].score}});
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "rank,id,score\n";
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            std::cout << i + 1 << "," << csv_escape(ranked[i].id) << ","
                      << format_score(ranked[i].score) << "\n";
        }
    }
    return 0;
}

struct TfIdfKeywordsOptions {
    CommonOptions common;
    std::string exclude;
};

int run_tfidf_keywords(const TfIdfKeywordsOptions& options) {
    const interest::TokenizerConfig config;
    const interest::StopwordList stopwords = load_stopwords(options.common);
    const interest::Corpus corpus =
        interest::load_corpus_file(options.common.corpus_path, config, stopwords);

    const std::vector<std::string> exclude =
        interest::tokenize(options.exclude, config, stopwords);

    auto ranked = interest::rank_keywords(corpus, stopwords, exclude);
    truncate_rows(ranked, options.common.top_n);

    if (options.common.output_format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            const auto& keyword = ranked[i];
            rows.push_back({{"rank", i + 1},
                            {"term", keyword.term},
                            {"tf_sum", keyword.aggregate_tf},
                            {"idf", keyword.idf},
                            {"value", keyword.value}});
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "rank,term,tf_sum,idf,value\n";
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            const auto& keyword = ranked[i];
            std::cout << i + 1 << "," << csv_escape(keyword.term) << ","
                      << format_score(keyword.aggregate_tf) << "," << format_score(keyword.idf)
                      << "," << format_score(keyword.value) << "\n";
        }
    }
    return 0;
}

// ---- gen-corpus -----------------------------------------------------------

struct GenCorpusOptions {
    std::string recipe_path;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_gen_corpus(const GenCorpusOptions& options) {
    const interest::Recipe recipe = interest::load_recipe_file(options.recipe_path);
    const std::vector<interest::CorpusRecord> records =
        interest::generate_corpus(recipe, options.seed);
    if (options.out_path.empty()) {
        interest::write_corpus_records(std::cout, records);
    } else {
        interest::write_corpus_file(options.out_path, records);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interestingness scoring toolkit: match/mismatch ranking, "
                 "low/high-threshold keyword discovery, and tf-idf in ranking "
                 "and keyword-discovery modes"};
    app.require_subcommand(1);

    RankMMOptions rank_mm;
    auto* rank_mm_cmd =
        app.add_subcommand("rank-mm", "Rank corpus items by match*mismatch interestingness");
    add_common_options(*rank_mm_cmd, rank_mm.common);
    rank_mm_cmd->add_option("--field", rank_mm.field_path, "Field metadata keyword file")
        ->required();
    rank_mm_cmd->add_option("--match", rank_mm.match_mode, "Match coefficient flavor")
        ->check(CLI::IsMember({"boolean", "count"}))
        ->capture_default_str();

    DiscoverOptions discover;
    auto* discover_cmd =
        app.add_subcommand("discover", "Discover new keywords via low/high thresholds");
    add_common_options(*discover_cmd, discover.common);
    discover_cmd->add_option("--query", discover.query, "Search query terms")->required();
    discover_cmd->add_option("--low-t", discover.low_threshold, "Candidacy threshold")
        ->capture_default_str();
    discover_cmd->add_option("--high-t", discover.high_threshold, "Verification threshold")
        ->required();
    discover_cmd->add_option("--max-results", discover.max_results, "Result-set sample size")
        ->capture_default_str();
    discover_cmd->add_option("--histogram", discover.histogram_path,
                             "Write per-candidate verification counts (CSV) to this file");

    TfIdfRankOptions tfidf_rank;
    auto* tfidf_rank_cmd =
        app.add_subcommand("tfidf-rank", "Rank documents by tf-idf for given keywords");
    add_common_options(*tfidf_rank_cmd, tfidf_rank.common);
    tfidf_rank_cmd->add_option("--keywords", tfidf_rank.keywords, "Keywords of relevance")
        ->required();

    TfIdfKeywordsOptions tfidf_keywords;
    auto* tfidf_keywords_cmd = app.add_subcommand(
        "tfidf-keywords", "Rank candidate keywords of a result set by tf-idf");
    add_common_options(*tfidf_keywords_cmd, tfidf_keywords.common);
    tfidf_keywords_cmd->add_option("--exclude", tfidf_keywords.exclude,
                                   "Terms to leave out (e.g. the original query)");

    GenCorpusOptions gen_corpus;
    auto* gen_corpus_cmd =
        app.add_subcommand("gen-corpus", "Generate a deterministic synthetic corpus");
    gen_corpus_cmd->add_option("--recipe", gen_corpus.recipe_path, "Recipe file")->required();
    gen_corpus_cmd->add_option("--seed", gen_corpus.seed, "Generator seed")
        ->capture_default_str();
    gen_corpus_cmd->add_option("--out", gen_corpus.out_path,
                               "Output corpus file (stdout when omitted)");

    rank_mm_cmd->callback([&] { run_rank_mm(rank_mm); });
    discover_cmd->callback([&] { run_discover(discover); });
    tfidf_rank_cmd->callback([&] { run_tfidf_rank(tfidf_rank); });
    tfidf_keywords_cmd->callback([&] { run_tfidf_keywords(tfidf_keywords); });
    gen_corpus_cmd->callback([&] { run_gen_corpus(gen_corpus); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
