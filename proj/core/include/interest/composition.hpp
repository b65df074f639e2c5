#pragma once

#include <utility>

namespace interest {

/// Interestingness as the composition of exactly two stages: an
/// unexpectedness stage applied to the input first, then a relevance
/// stage applied to its output. The order is fixed by construction and
/// not configurable; general function composition does not commute.
///
/// Both stages must be pure (same input, same output) for pipelines to be
/// safely evaluated concurrently over disjoint inputs. The pipeline object
/// itself is immutable and shareable.
///
/// There is deliberately no n-ary chain builder: interestingness combines
/// two functions, no fewer and no more.
template <typename Relevance, typename Unexpectedness>
class BipolarPipeline {
public:
    BipolarPipeline(Relevance relevance, Unexpectedness unexpectedness)
        : relevance_(std::move(relevance)), unexpectedness_(std::move(unexpectedness)) {}

    template <typename Input>
    auto evaluate(const Input& input) const {
        return relevance_(unexpectedness_(input));
    }

    template <typename Input>
    auto operator()(const Input& input) const {
        return evaluate(input);
    }

private:
    Relevance relevance_;
    Unexpectedness unexpectedness_;
};

/// Builds a pipeline whose evaluation on S yields relevance(unexpectedness(S)).
template <typename Relevance, typename Unexpectedness>
BipolarPipeline<Relevance, Unexpectedness> compose(Relevance relevance,
                                                   Unexpectedness unexpectedness) {
    return BipolarPipeline<Relevance, Unexpectedness>(std::move(relevance),
                                                      std::move(unexpectedness));
}

template <typename Relevance, typename Unexpectedness, typename Input>
auto evaluate(const BipolarPipeline<Relevance, Unexpectedness>& pipeline, const Input& input) {
    return pipeline.evaluate(input);
}

/// Multiplicative special case: relevance * unexpectedness / norm.
/// Commutative in the first two arguments. Throws std::invalid_argument
/// when norm <= 0.
double multiply_scores(double relevance, double unexpectedness, double norm);

}  // namespace interest
