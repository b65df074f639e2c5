#include "interest/document.hpp"

#include <stdexcept>
#include <utility>

namespace interest {

Document::Document(std::string id, std::string title, std::string summary,
                   const std::vector<std::string>& tokens)
    : id_(std::move(id)), title_(std::move(title)), summary_(std::move(summary)) {
    if (id_.empty()) {
        throw std::invalid_argument("document id must be non-empty");
    }
    for (const auto& token : tokens) {
        ++term_counts_[token];
        ++total_terms_;
    }
    for (const auto& [term, count] : term_counts_) {
        term_set_.insert(term);
    }
}

std::int64_t Document::count(const std::string& term) const {
    const auto it = term_counts_.find(term);
    return it == term_counts_.end() ? 0 : it->second;
}

Document build_document(std::string id, std::string title, std::string summary,
                        const TokenizerConfig& config, const StopwordList& stopwords) {
    const std::vector<std::string> tokens =
        tokenize(title + " " + summary, config, stopwords);
    return Document(std::move(id), std::move(title), std::move(summary), tokens);
}

}  // namespace interest
