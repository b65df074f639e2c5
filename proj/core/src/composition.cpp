#include "interest/composition.hpp"

#include <stdexcept>

namespace interest {

double multiply_scores(double relevance, double unexpectedness, double norm) {
    if (!(norm > 0.0)) {
        throw std::invalid_argument("multiply_scores: norm must be > 0");
    }
    return relevance * unexpectedness / norm;
}

}  // namespace interest
