#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "interest/tokenizer.hpp"

namespace interest {

using TermSet = std::set<std::string>;
using TermCounts = std::map<std::string, std::int64_t>;

/// Tokenized text unit. Immutable after construction; safe to share across
/// threads. The scored text of an item is its title concatenated with its
/// summary, so term counts always cover both.
class Document {
public:
    Document(std::string id, std::string title, std::string summary,
             const std::vector<std::string>& tokens);

    const std::string& id() const { return id_; }
    const std::string& title() const { return title_; }
    const std::string& summary() const { return summary_; }

    /// Occurrence count per distinct term (absent terms count 0).
    const TermCounts& term_counts() const { return term_counts_; }
    /// Distinct terms; always equals the key set of term_counts().
    const TermSet& term_set() const { return term_set_; }
    /// Total occurrences of all terms (sum of term_counts values).
    std::int64_t total_terms() const { return total_terms_; }

    std::int64_t count(const std::string& term) const;
    bool contains(const std::string& term) const { return term_set_.count(term) != 0; }

private:
    std::string id_;
    std::string title_;
    std::string summary_;
    TermCounts term_counts_;
    TermSet term_set_;
    std::int64_t total_terms_ = 0;
};

/// Tokenizes title + " " + summary and builds a Document.
/// Throws std::invalid_argument when id is empty.
Document build_document(std::string id, std::string title, std::string summary,
                        const TokenizerConfig& config, const StopwordList& stopwords);

}  // namespace interest
