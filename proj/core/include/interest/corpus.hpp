#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "interest/document.hpp"

namespace interest {

/// Ordered collection of documents with a document-frequency index and a
/// vocabulary, both derived from the documents at construction time.
/// Immutable afterwards; any number of threads may read it concurrently.
class Corpus {
public:
    Corpus() = default;

    /// Throws std::invalid_argument naming the offending id when two
    /// documents share one.
    explicit Corpus(std::vector<Document> documents);

    std::size_t size() const { return documents_.size(); }
    bool empty() const { return documents_.empty(); }

    const std::vector<Document>& documents() const { return documents_; }
    const Document& at(std::size_t index) const { return documents_.at(index); }

    /// Number of documents whose term_set contains the term; 0 when unseen.
    std::size_t document_frequency(const std::string& term) const;
    const std::map<std::string, std::size_t>& doc_freq() const { return doc_freq_; }
    const TermSet& vocabulary() const { return vocabulary_; }

private:
    std::vector<Document> documents_;
    std::map<std::string, std::size_t> doc_freq_;
    TermSet vocabulary_;
};

/// An ordered search result sample is structurally a corpus.
using ResultSet = Corpus;

Corpus build_corpus(std::vector<Document> documents);

/// Sums each term's occurrence counts over all documents in the set.
TermCounts aggregate_term_counts(const Corpus& result_set);

}  // namespace interest
