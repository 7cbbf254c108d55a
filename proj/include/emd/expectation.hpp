#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "emd/rational.hpp"

namespace emd {

/**
 * Limiting expected EMD over ordered pairs of uniform points on a pair of
 * probability simplices with p and q coordinates, as an exact rational.
 * Satisfies
 *   M(p,q) = ((p-1) M(p-1,q) + (q-1) M(p,q-1) + |p-q|) / (p+q-1)
 * with M = 0 when either index is non-positive.
 */
BigRational m_value(int p, int q);

/// Independent route: (p-1)! (q-1)! / (p+q-1)! times the total-EMD
/// polynomial evaluated at t = 1. Agrees with m_value exactly.
BigRational m_value_via_n(int p, int q);

/// m_value(n,n) / (n-1): the limiting mean of the unit-normalized EMD.
BigRational m_tilde(int n);

/// A point of the probability simplex: non-negative reals summing to 1.
struct SimplexSample {
    std::vector<double> point;
};

/**
 * Uniform sampler on the probability simplex, built from normalized
 * standard exponentials. The stream is fully determined by the seed: each
 * sample(n) call consumes exactly n draws from a mt19937_64 engine, each
 * draw mapped to (0,1] by u = ((x >> 11) + 1) * 2^-53 and then to -log(u).
 */
class SimplexSampler {
  public:
    explicit SimplexSampler(std::uint64_t seed) : engine_(seed) {}

    std::vector<double> sample(int n);

  private:
    std::mt19937_64 engine_;
};

SimplexSample sample_uniform_simplex(int n, std::uint64_t seed);

struct MonteCarloResult {
    double estimate = 0;
    double std_error = 0;
};

/**
 * Sample mean and standard error of the EMD over independent uniform pairs
 * on the n-simplex. Trials run sequentially on one seeded stream, so the
 * (n, trials, seed) triple fully determines the result.
 */
MonteCarloResult monte_carlo_mean_emd(int n, long long trials, std::uint64_t seed);

}  // namespace emd
