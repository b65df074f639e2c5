#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace interest {

/// Tokenization settings shared by every ingestion path.
///
/// The split rule is fixed: a token is a maximal run of word codepoints,
/// where ASCII alphanumerics are word codepoints and every non-ASCII
/// codepoint is treated as one (no Unicode category tables are consulted).
/// Lowercasing covers ASCII plus the Latin-1 supplement letters
/// (U+00C0..U+00DE except the multiplication sign); other codepoints pass
/// through unchanged. Tokenization is deterministic: the same text and
/// config always produce the same token sequence.
struct TokenizerConfig {
    bool lowercase = true;
    std::size_t min_token_len = 2;  // measured in codepoints, must be >= 1
    bool strip_stopwords = true;
};

/// Set of trivial words excluded from scoring and candidate extraction.
/// Membership is case-insensitive: words are lowercased on insert and on
/// lookup.
class StopwordList {
public:
    StopwordList() = default;
    StopwordList(std::initializer_list<std::string> words);

    /// Built-in English list (articles, pronouns, prepositions,
    /// conjunctions, auxiliaries). Used by the CLI when no stopword file
    /// is given.
    static StopwordList default_english();

    void insert(std::string_view word);
    bool contains(std::string_view word) const;

    bool empty() const { return words_.size() == 0; }
    std::size_t size() const { return words_.size(); }
    const std::set<std::string>& words() const { return words_; }

private:
    std::set<std::string> words_;
};

/// Lowercases text codepoint by codepoint (ASCII + Latin-1 supplement).
std::string lowercase_text(std::string_view text);

/// Splits text into normalized tokens, in text order. Tokens shorter than
/// config.min_token_len are dropped, and stopwords are dropped when
/// config.strip_stopwords is set. Empty or all-separator input yields an
/// empty list. Throws std::invalid_argument if config.min_token_len < 1.
std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config,
                                  const StopwordList& stopwords);

}  // namespace interest
