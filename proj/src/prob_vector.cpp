#include "emd/prob_vector.hpp"

#include <stdexcept>

namespace emd {

ProbVector::ProbVector(std::vector<BigRational> w) : weights(std::move(w)) {
    BigRational total = 0;
    for (const BigRational& x : weights) {
        if (x < 0) throw std::invalid_argument("probability weight is negative");
        total += x;
    }
    if (total != 1) throw std::invalid_argument("probability weights do not sum to 1");
}

ProbVector ProbVector::from_counts(const Composition& counts) {
    long long total = counts.sum();
    if (total <= 0) throw std::invalid_argument("counts sum to zero");
    std::vector<BigRational> w;
    w.reserve(counts.parts.size());
    for (long long c : counts.parts) w.push_back(make_rational(c, total));
    return ProbVector(std::move(w));
}

}  // namespace emd
