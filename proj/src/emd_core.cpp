#include "emd/emd_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace emd {

JointMatrix::JointMatrix(int rows, int cols)
    : entries(static_cast<std::size_t>(rows),
              std::vector<long long>(static_cast<std::size_t>(cols), 0)) {}

JointMatrix::JointMatrix(std::vector<std::vector<long long>> e) : entries(std::move(e)) {
    for (const auto& row : entries) {
        if (row.size() != entries[0].size())
            throw std::invalid_argument("ragged joint matrix");
        for (long long v : row)
            if (v < 0) throw std::invalid_argument("joint matrix entry is negative");
    }
}

Composition JointMatrix::row_sums() const {
    std::vector<long long> sums(entries.size(), 0);
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (long long v : entries[i]) sums[i] += v;
    return Composition(std::move(sums));
}

Composition JointMatrix::col_sums() const {
    std::vector<long long> sums(static_cast<std::size_t>(cols()), 0);
    for (const auto& row : entries)
        for (std::size_t j = 0; j < row.size(); ++j) sums[j] += row[j];
    return Composition(std::move(sums));
}

long long JointMatrix::total() const {
    long long t = 0;
    for (const auto& row : entries)
        for (long long v : row) t += v;
    return t;
}

long long transport_cost(const JointMatrix& j) {
    long long cost = 0;
    for (int r = 0; r < j.rows(); ++r)
        for (int c = 0; c < j.cols(); ++c)
            cost += j.entries[r][c] * (r > c ? r - c : c - r);
    return cost;
}

bool has_chain_support(const JointMatrix& j) {
    // Support cells in row-major order form a chain iff the column indices
    // are non-decreasing from one positive cell to the next.
    int last_col = -1;
    for (int r = 0; r < j.rows(); ++r)
        for (int c = 0; c < j.cols(); ++c)
            if (j.entries[r][c] > 0) {
                if (c < last_col) return false;
                last_col = c;
            }
    return true;
}

long long emd_discrete(const Composition& mu, const Composition& nu) {
    if (mu.sum() != nu.sum()) throw std::invalid_argument("margins differ");
    int n = std::max(mu.size(), nu.size());
    long long prefix = 0, total = 0;
    for (int i = 0; i < n; ++i) {
        long long a = i < mu.size() ? mu.parts[i] : 0;
        long long b = i < nu.size() ? nu.parts[i] : 0;
        prefix += a - b;
        total += std::llabs(prefix);
    }
    return total;
}

BigRational emd_continuous(const ProbVector& mu, const ProbVector& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("probability vectors differ in length");
    BigRational prefix = 0, total = 0;
    for (int i = 0; i < mu.size(); ++i) {
        prefix += mu.weights[i] - nu.weights[i];
        total += abs(prefix);
    }
    return total;
}

double emd_continuous(std::span<const double> mu, std::span<const double> nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("probability vectors differ in length");
    double prefix = 0, total = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        prefix += mu[i] - nu[i];
        total += std::fabs(prefix);
    }
    return total;
}

BigRational emd_unit_normalized(const Composition& mu, const Composition& nu) {
    if (mu.size() != nu.size() || mu.size() < 2 || mu.sum() < 1 || mu.sum() != nu.sum())
        throw std::invalid_argument("normalization undefined");
    long long s = mu.sum();
    long long diameter = s * (mu.size() - 1);
    return make_rational(emd_discrete(mu, nu), diameter);
}

namespace {

// Depth-first fill of the plan, row by row; each row is a composition of
// the row margin bounded by the remaining column capacities.
struct OracleSearch {
    const std::vector<long long>& mu;
    std::vector<long long> col_left;
    long long best;

    OracleSearch(const std::vector<long long>& m, const std::vector<long long>& n)
        : mu(m), col_left(n), best(std::numeric_limits<long long>::max()) {}

    void fill_row(std::size_t r, std::size_t c, long long remaining, long long cost) {
        long long capacity = 0;
        for (std::size_t k = c; k < col_left.size(); ++k) capacity += col_left[k];
        if (remaining > capacity) return;
        if (c + 1 == col_left.size()) {
            long long d = static_cast<long long>(r > c ? r - c : c - r);
            col_left[c] -= remaining;
            descend(r + 1, cost + remaining * d);
            col_left[c] += remaining;
            return;
        }
        long long d = static_cast<long long>(r > c ? r - c : c - r);
        for (long long v = std::min(remaining, col_left[c]); v >= 0; --v) {
            col_left[c] -= v;
            fill_row(r, c + 1, remaining - v, cost + v * d);
            col_left[c] += v;
        }
    }

    void descend(std::size_t r, long long cost) {
        if (r == mu.size()) {
            best = std::min(best, cost);
            return;
        }
        fill_row(r, 0, mu[r], cost);
    }
};

}  // namespace

long long emd_oracle(const Composition& mu, const Composition& nu,
                     const OracleLimits& limits) {
    if (mu.sum() != nu.sum()) throw std::invalid_argument("margins differ");
    if (mu.sum() > limits.max_sum || mu.size() * nu.size() > limits.max_cells)
        throw std::invalid_argument("oracle cap exceeded");
    if (mu.size() == 0 || nu.size() == 0) return 0;  // equal margins, so both empty
    OracleSearch search(mu.parts, nu.parts);
    search.descend(0, 0);
    return search.best;
}

namespace {

JointMatrix chain_repair_impl(const JointMatrix& j, long long* moves_out) {
    JointMatrix out = j;
    int p = out.rows(), q = out.cols();
    // Every move transfers the smaller entry of an incomparable pair onto
    // the two comparable rectangle corners; sum(i*j*J_ij) strictly grows,
    // so the loop terminates.
    long long guard = static_cast<long long>(out.total()) * p * q + 1;
    for (long long iter = 0; iter < guard; ++iter) {
        bool moved = false;
        for (int r = 0; r < p && !moved; ++r) {
            for (int c = 0; c < q && !moved; ++c) {
                if (out.entries[r][c] == 0) continue;
                // An incomparable partner after (r,c) in scan order sits in
                // a later row and an earlier column.
                for (int r2 = r + 1; r2 < p && !moved; ++r2) {
                    for (int c2 = 0; c2 < c && !moved; ++c2) {
                        if (out.entries[r2][c2] == 0) continue;
                        long long m = std::min(out.entries[r][c], out.entries[r2][c2]);
                        out.entries[r][c] -= m;
                        out.entries[r2][c2] -= m;
                        out.entries[r][c2] += m;
                        out.entries[r2][c] += m;
                        moved = true;
                    }
                }
            }
        }
        if (!moved) {
            if (moves_out) *moves_out = iter;
            return out;
        }
    }
    throw std::logic_error("chain repair failed to terminate");
}

}  // namespace

JointMatrix chain_repair(const JointMatrix& j) { return chain_repair_impl(j, nullptr); }

long long chain_repair_move_count(const JointMatrix& j) {
    long long moves = 0;
    chain_repair_impl(j, &moves);
    return moves;
}

JointMatrix rsk_phi(const Composition& mu, const Composition& nu) {
    if (mu.sum() != nu.sum()) throw std::invalid_argument("margins differ");
    JointMatrix j(mu.size(), nu.size());
    // Run-length walk over the sorted words of mu and nu: letter k appears
    // mu_k (resp. nu_k) times, so matched runs tally straight into J.
    int i = 0, k = 0;
    long long left_i = mu.size() ? mu.parts[0] : 0;
    long long left_k = nu.size() ? nu.parts[0] : 0;
    while (i < mu.size() && k < nu.size()) {
        if (left_i == 0) {
            if (++i < mu.size()) left_i = mu.parts[i];
            continue;
        }
        if (left_k == 0) {
            if (++k < nu.size()) left_k = nu.parts[k];
            continue;
        }
        long long step = std::min(left_i, left_k);
        j.entries[i][k] += step;
        left_i -= step;
        left_k -= step;
    }
    return j;
}

std::pair<Composition, Composition> rsk_phi_inverse(const JointMatrix& j) {
    if (!has_chain_support(j)) throw std::invalid_argument("not a chain matrix");
    return {j.row_sums(), j.col_sums()};
}

}  // namespace emd
