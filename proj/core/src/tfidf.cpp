#include "interest/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace interest {

double tf(const Document& doc, const std::string& term) {
    if (doc.total_terms() == 0) {
        throw std::domain_error("tf: document '" + doc.id() + "' is empty");
    }
    return static_cast<double>(doc.count(term)) / static_cast<double>(doc.total_terms());
}

double idf(const Corpus& corpus, const std::string& term) {
    if (corpus.empty()) {
        throw std::domain_error("idf: corpus is empty");
    }
    const std::size_t df = corpus.document_frequency(term);
    if (df == 0) {
        throw std::domain_error("idf: term '" + term + "' does not occur in the corpus");
    }
    return std::log(static_cast<double>(corpus.size()) / static_cast<double>(df));
}

TfIdfScore tfidf(const Corpus& corpus, const Document& doc, const std::string& term) {
    TfIdfScore score;
    score.term = term;
    score.tf = tf(doc, term);
    score.idf = idf(corpus, term);
    score.value = score.tf * score.idf;
    return score;
}

std::vector<DocumentScore> rank_documents(const Corpus& corpus,
                                          const std::vector<std::string>& keywords) {
    if (keywords.empty()) {
        throw std::invalid_argument("rank_documents: keyword list must be non-empty");
    }
    // Unseen keywords are skipped; duplicate keywords count once.
    std::set<std::string> seen_keywords;
    std::vector<std::pair<std::string, double>> keyword_idf;
    for (const auto& keyword : keywords) {
        if (!seen_keywords.insert(keyword).second) continue;
        if (corpus.document_frequency(keyword) == 0) continue;
        keyword_idf.emplace_back(keyword, idf(corpus, keyword));
    }
    if (keyword_idf.empty()) {
        throw std::domain_error("rank_documents: none of the keywords occur in the corpus");
    }

    std::vector<DocumentScore> scores;
    scores.reserve(corpus.size());
    for (const auto& doc : corpus.documents()) {
        double total = 0.0;
        if (doc.total_terms() > 0) {
            for (const auto& [keyword, keyword_idf_value] : keyword_idf) {
                const std::int64_t count = doc.count(keyword);
                if (count == 0) continue;
                total += tf(doc, keyword) * keyword_idf_value;
            }
        }
        scores.push_back({doc.id(), total});
    }
    std::sort(scores.begin(), scores.end(), [](const DocumentScore& a, const DocumentScore& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.id < b.id;
    });
    return scores;
}

std::vector<KeywordScore> rank_keywords(const ResultSet& results, const StopwordList& stopwords,
                                        const std::vector<std::string>& exclude) {
    std::vector<KeywordScore> scores;
    if (results.empty()) return scores;

    const std::set<std::string> excluded(exclude.begin(), exclude.end());
    for (const auto& term : results.vocabulary()) {
        if (stopwords.contains(term)) continue;
        if (excluded.count(term) != 0) continue;

        KeywordScore score;
        score.term = term;
        score.idf = idf(results, term);
        for (const auto& doc : results.documents()) {
            if (doc.total_terms() == 0) continue;
            score.aggregate_tf += tf(doc, term);
        }
        score.value = score.aggregate_tf * score.idf;
        scores.push_back(std::move(score));
    }
    std::sort(scores.begin(), scores.end(), [](const KeywordScore& a, const KeywordScore& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.term < b.term;
    });
    return scores;
}

}  // namespace interest
