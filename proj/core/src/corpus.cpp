#include "interest/corpus.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace interest {

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
    std::set<std::string> seen_ids;
    for (const auto& doc : documents_) {
        if (!seen_ids.insert(doc.id()).second) {
            throw std::invalid_argument("duplicate document id: " + doc.id());
        }
        for (const auto& term : doc.term_set()) {
            ++doc_freq_[term];
            vocabulary_.insert(term);
        }
    }
}

std::size_t Corpus::document_frequency(const std::string& term) const {
    const auto it = doc_freq_.find(term);
    return it == doc_freq_.end() ? 0 : it->second;
}

Corpus build_corpus(std::vector<Document> documents) {
    return Corpus(std::move(documents));
}

TermCounts aggregate_term_counts(const Corpus& result_set) {
    TermCounts totals;
    for (const auto& doc : result_set.documents()) {
        for (const auto& [term, count] : doc.term_counts()) {
            totals[term] += count;
        }
    }
    return totals;
}

}  // namespace interest
