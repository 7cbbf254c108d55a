#pragma once

#include <vector>

#include "emd/compositions.hpp"
#include "emd/rational.hpp"

namespace emd {

/// Exact probability distribution on {1,...,n}: non-negative rational
/// weights summing to exactly 1.
struct ProbVector {
    std::vector<BigRational> weights;

    ProbVector() = default;
    explicit ProbVector(std::vector<BigRational> w);

    /// counts / sum(counts); the sum must be positive.
    static ProbVector from_counts(const Composition& counts);

    int size() const { return static_cast<int>(weights.size()); }

    bool operator==(const ProbVector& o) const = default;
};

}  // namespace emd
