#pragma once

#include <span>
#include <utility>
#include <vector>

#include "emd/compositions.hpp"
#include "emd/prob_vector.hpp"
#include "emd/rational.hpp"

namespace emd {

/// Ground metric on index pairs: entry(i,j) = |i-j| computed on demand.
struct CostMatrix {
    int rows = 0;
    int cols = 0;
    long long entry(int i, int j) const { return i > j ? i - j : j - i; }
};

/// Non-negative integer matrix with prescribed margins: a transport plan
/// moving row-sum mass onto column-sum mass.
struct JointMatrix {
    std::vector<std::vector<long long>> entries;

    JointMatrix() = default;
    JointMatrix(int rows, int cols);
    explicit JointMatrix(std::vector<std::vector<long long>> e);

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }

    Composition row_sums() const;
    Composition col_sums() const;
    long long total() const;

    bool operator==(const JointMatrix& o) const = default;
};

/// Total cost of the plan under the |i-j| ground metric.
long long transport_cost(const JointMatrix& j);

/// True when the positive entries are totally ordered in the product order.
bool has_chain_support(const JointMatrix& j);

/**
 * Discrete earth mover's distance between two compositions of the same sum.
 * Part counts may differ; the shorter vector is zero-padded on the right.
 * Computed by the prefix-sum formula, which equals the minimum transport
 * cost over all plans with margins (mu, nu).
 */
long long emd_discrete(const Composition& mu, const Composition& nu);

/// Prefix-sum EMD on exact probability vectors of equal length.
BigRational emd_continuous(const ProbVector& mu, const ProbVector& nu);

/// Floating-point variant for sampled distributions.
double emd_continuous(std::span<const double> mu, std::span<const double> nu);

/// emd_discrete scaled by 1/(s*(n-1)); a metric of diameter 1.
/// Requires equal part counts n >= 2 and equal sums s >= 1.
BigRational emd_unit_normalized(const Composition& mu, const Composition& nu);

/// Size guard for the exhaustive transport solver.
struct OracleLimits {
    long long max_sum = 6;
    int max_cells = 16;
};

/**
 * Exact minimum transport cost by exhaustive enumeration of every
 * non-negative integer matrix with margins (mu, nu). Intended as an
 * independent check of emd_discrete on small instances.
 */
long long emd_oracle(const Composition& mu, const Composition& nu,
                     const OracleLimits& limits = {});

/**
 * Repairs a plan to one of no greater cost whose support is a chain,
 * preserving the margins. Repeatedly applies the four-entry uncrossing
 * move to the first incomparable support pair in scan order.
 */
JointMatrix chain_repair(const JointMatrix& j);

/// Number of uncrossing moves chain_repair performs on j.
long long chain_repair_move_count(const JointMatrix& j);

/**
 * The one-row RSK pairing of two compositions of equal sum: aligns the
 * sorted words of mu and nu letter by letter and tallies matches. The
 * result is the monotone transport plan; its support is a chain, its cost
 * is emd_discrete(mu, nu).
 */
JointMatrix rsk_phi(const Composition& mu, const Composition& nu);

/// Inverse of rsk_phi on chain-supported matrices: (row sums, column sums).
std::pair<Composition, Composition> rsk_phi_inverse(const JointMatrix& j);

}  // namespace emd
