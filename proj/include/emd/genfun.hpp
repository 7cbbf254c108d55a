#pragma once

#include <utility>
#include <vector>

#include "emd/rational.hpp"
#include "emd/tpoly.hpp"
#include "emd/ztseries.hpp"

namespace emd {

/**
 * Truncated expansion of the bivariate distance-distribution series for
 * composition pairs with p and q parts: the coefficient of z^k t^s counts
 * ordered pairs (mu, nu) of compositions of s at distance k.
 *
 * Built from the three-term recursion
 *   H(p,q) = (H(p-1,q) + H(p,q-1) - H(p-1,q-1)) / (1 - z^|p-q| t)
 * with H(1,1) = 1/(1-t) and H = 0 off the positive quadrant, filled as a
 * table over (p,q).
 */
ZTSeries h_series(int p, int q, std::size_t truncation);

/// Exact distribution of the discrete EMD over all ordered pairs of
/// compositions of s into n parts. counts[k] = number of pairs at distance k.
struct EmdHistogram {
    long long s = 0;
    int n = 1;
    std::vector<BigInt> counts;

    BigInt total() const;
    BigRational mean() const;
    /// mean / (s*(n-1)); requires n >= 2 and s >= 1.
    BigRational unit_normalized_mean() const;
};

EmdHistogram histogram(long long s, int n);

/**
 * Numerator polynomial of the z = 1 specialization:
 * coefficient i equals binomial(p-1, i) * binomial(q-1, i).
 */
TPoly w_poly(int p, int q);

/**
 * Numerator polynomial of the z-derivative at z = 1; its expansion against
 * 1/(1-t)^(p+q) generates the total EMD over all pairs per degree.
 */
TPoly n_poly(int p, int q);

/// Sum of emd over all ordered pairs in C(s,p) x C(s,q).
BigInt sum_emd(int p, int q, long long s);

/// Exact mean of the discrete EMD over C(s,p) x C(s,q).
BigRational mean_emd_discrete(int p, int q, long long s);

/// mean_emd_discrete(n,n,s) / (s*(n-1)); requires n >= 2, s >= 1.
BigRational mean_emd_unit_normalized(int n, long long s);

/**
 * Checks, over the span from the lowest to the highest nonzero degree,
 * whether the coefficients read the same in both directions and whether
 * they rise to a single peak and then fall. The zero polynomial passes both.
 */
std::pair<bool, bool> check_palindromic_unimodal(const TPoly& poly);

}  // namespace emd
