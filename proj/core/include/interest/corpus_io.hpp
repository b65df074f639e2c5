#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "interest/corpus.hpp"
#include "interest/match_mismatch.hpp"
#include "interest/tokenizer.hpp"

namespace interest {

/// Raw, untokenized corpus entry as stored on disk. An optional "body"
/// field in a record is folded into the summary on read, so each item keeps
/// a single scoring text.
struct CorpusRecord {
    std::string id;
    std::string title;
    std::string summary;

    bool operator==(const CorpusRecord&) const = default;
};

/// Corpus files are JSON Lines: one object per line with string fields
/// "id", "title", "summary" (and optionally "body"). Blank lines are
/// skipped. Parse and validation errors carry the source name and
/// 1-based line number.
std::vector<CorpusRecord> read_corpus_records(std::istream& in,
                                              const std::string& source_name = "<stream>");
std::vector<CorpusRecord> read_corpus_file(const std::filesystem::path& path);

void write_corpus_records(std::ostream& out, const std::vector<CorpusRecord>& records);
void write_corpus_file(const std::filesystem::path& path,
                       const std::vector<CorpusRecord>& records);

Corpus corpus_from_records(const std::vector<CorpusRecord>& records,
                           const TokenizerConfig& config, const StopwordList& stopwords);
Corpus load_corpus_file(const std::filesystem::path& path, const TokenizerConfig& config,
                        const StopwordList& stopwords);

/// Stopword files hold one word per line; `#` lines are comments and blank
/// lines are skipped. Words are lowercased on load.
StopwordList read_stopword_list(std::istream& in);
StopwordList load_stopword_file(const std::filesystem::path& path);

/// Field metadata files reuse the stopword format plus an optional
/// `label: <name>` header line. Every keyword line is normalized through
/// the tokenizer (multi-word lines contribute each token), so loaded
/// keywords always survive tokenization unchanged. Throws when no keyword
/// remains.
FieldMetadata read_field_metadata(std::istream& in, const TokenizerConfig& config,
                                  const StopwordList& stopwords,
                                  const std::string& source_name = "<stream>");
FieldMetadata load_field_file(const std::filesystem::path& path, const TokenizerConfig& config,
                              const StopwordList& stopwords);

}  // namespace interest
