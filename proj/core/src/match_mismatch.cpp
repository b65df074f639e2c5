#include "interest/match_mismatch.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace interest {

FieldMetadata::FieldMetadata(TermSet keywords, std::string label)
    : keywords_(std::move(keywords)), label_(std::move(label)) {
    if (keywords_.empty()) {
        throw std::invalid_argument("field metadata requires at least one keyword");
    }
}

std::size_t match_count(const FieldMetadata& field, const TermSet& item) {
    std::vector<std::string> common;
    std::set_intersection(field.keywords().begin(), field.keywords().end(), item.begin(),
                          item.end(), std::back_inserter(common));
    return common.size();
}

std::size_t match_boolean(const FieldMetadata& field, const TermSet& item) {
    for (const auto& keyword : field.keywords()) {
        if (item.count(keyword) != 0) return 1;
    }
    return 0;
}

std::size_t mismatch(const FieldMetadata& field, const TermSet& item) {
    std::vector<std::string> either_only;
    std::set_symmetric_difference(field.keywords().begin(), field.keywords().end(),
                                  item.begin(), item.end(), std::back_inserter(either_only));
    return either_only.size();
}

MMScore interestingness_mm(const FieldMetadata& field, const TermSet& item, MatchMode mode) {
    MMScore score;
    score.match = mode == MatchMode::kBoolean ? match_boolean(field, item)
                                              : match_count(field, item);
    score.mismatch = mismatch(field, item);
    score.norm = std::max<std::size_t>(item.size(), 1);
    score.value = static_cast<double>(score.match) * static_cast<double>(score.mismatch) /
                  static_cast<double>(score.norm);
    return score;
}

std::vector<MMRankedItem> rank_items(const FieldMetadata& field, const Corpus& items,
                                     MatchMode mode) {
    std::vector<MMRankedItem> ranked;
    ranked.reserve(items.size());
    for (const auto& doc : items.documents()) {
        ranked.push_back({doc.id(), interestingness_mm(field, doc.term_set(), mode)});
    }
    std::sort(ranked.begin(), ranked.end(), [](const MMRankedItem& a, const MMRankedItem& b) {
        if (a.score.value != b.score.value) return a.score.value > b.score.value;
        return a.id < b.id;
    });
    return ranked;
}

}  // namespace interest
