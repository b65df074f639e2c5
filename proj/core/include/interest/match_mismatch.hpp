#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "interest/corpus.hpp"
#include "interest/document.hpp"

namespace interest {

/// Keyword set characterizing a field of interest. Keywords must already be
/// normalized (each survives tokenization unchanged); file loading in
/// corpus_io takes care of that. The set is never empty.
class FieldMetadata {
public:
    explicit FieldMetadata(TermSet keywords, std::string label = "");

    const TermSet& keywords() const { return keywords_; }
    const std::string& label() const { return label_; }

private:
    TermSet keywords_;
    std::string label_;
};

enum class MatchMode {
    kBoolean,  // 1 iff at least one keyword is shared
    kCount,    // number of shared keywords
};

/// Score breakdown: value == match * mismatch / norm, recomputable from the
/// parts. A fully expected item (mismatch 0) and an irrelevant item
/// (match 0) both score 0; interest requires both poles.
struct MMScore {
    std::size_t match = 0;
    std::size_t mismatch = 0;
    std::size_t norm = 1;
    double value = 0.0;
};

/// 1 iff the field and the item share at least one keyword.
std::size_t match_boolean(const FieldMetadata& field, const TermSet& item);

/// Number of keywords common to the field and the item.
std::size_t match_count(const FieldMetadata& field, const TermSet& item);

/// Size of the symmetric difference between the field keyword set and the
/// item term set: |(F - C) union (C - F)|.
std::size_t mismatch(const FieldMetadata& field, const TermSet& item);

/// Combines match and mismatch into a normalized score with norm = |item|
/// (clamped to >= 1). An empty item yields value 0 rather than an error.
MMScore interestingness_mm(const FieldMetadata& field, const TermSet& item,
                           MatchMode mode = MatchMode::kCount);

struct MMRankedItem {
    std::string id;
    MMScore score;
};

/// Scores every document against the field and sorts by value descending,
/// ties broken by document id ascending.
std::vector<MMRankedItem> rank_items(const FieldMetadata& field, const Corpus& items,
                                     MatchMode mode = MatchMode::kCount);

}  // namespace interest
