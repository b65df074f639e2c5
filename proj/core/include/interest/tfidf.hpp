#pragma once

#include <string>
#include <vector>

#include "interest/corpus.hpp"
#include "interest/document.hpp"
#include "interest/tokenizer.hpp"

namespace interest {

/// Term frequency of a term in a document: occurrence count divided by the
/// document's total term occurrences. 0 when the term is absent. Throws
/// std::domain_error on an empty document.
double tf(const Document& doc, const std::string& term);

/// Inverse document frequency: ln(N / df). 0 exactly for a term present in
/// every document; rarity raises the value. Throws std::domain_error when
/// the corpus is empty or the term is unseen (df == 0); callers summing
/// over terms skip unseen ones instead.
double idf(const Corpus& corpus, const std::string& term);

struct TfIdfScore {
    std::string term;
    double tf = 0.0;
    double idf = 0.0;
    double value = 0.0;  // always tf * idf
};

/// Per-document, per-term score: the multiplicative composition tf * idf.
TfIdfScore tfidf(const Corpus& corpus, const Document& doc, const std::string& term);

struct DocumentScore {
    std::string id;
    double score = 0.0;
};

/// Ranks documents by the sum of per-keyword tf-idf values (duplicate
/// keywords count once, unseen keywords are skipped). Sorted by score
/// descending, id ascending. Throws std::invalid_argument on an empty
/// keyword list and std::domain_error when no keyword occurs anywhere in
/// the corpus.
std::vector<DocumentScore> rank_documents(const Corpus& corpus,
                                          const std::vector<std::string>& keywords);

struct KeywordScore {
    std::string term;
    double aggregate_tf = 0.0;  // sum of tf over all documents in the set
    double idf = 0.0;
    double value = 0.0;  // always aggregate_tf * idf
};

/// Reciprocal mode: given a result set of interesting documents, scores
/// every non-stopword vocabulary term (minus explicit exclusions) by
/// idf * sum-of-tf and sorts descending, term ascending. A single-document
/// set degenerates to all-zero values.
std::vector<KeywordScore> rank_keywords(const ResultSet& results, const StopwordList& stopwords,
                                        const std::vector<std::string>& exclude = {});

}  // namespace interest
