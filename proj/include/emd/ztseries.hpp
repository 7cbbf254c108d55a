#pragma once

#include <vector>

#include "emd/zpoly.hpp"

namespace emd {

/**
 * Series in t truncated at degree S whose t-coefficients are integer
 * polynomials in z. Truncation is fixed at construction; combining series
 * with different truncation levels is an error.
 */
class ZTSeries {
  public:
    /// Zero series truncated at t^S.
    explicit ZTSeries(std::size_t truncation);

    static ZTSeries constant(const ZPoly& c, std::size_t truncation);

    std::size_t truncation() const { return coeffs_.size() - 1; }
    const ZPoly& coeff(std::size_t s) const { return coeffs_.at(s); }
    void set_coeff(std::size_t s, ZPoly p) { coeffs_.at(s) = std::move(p); }

    bool is_zero() const;

    ZTSeries operator+(const ZTSeries& o) const;
    ZTSeries operator-(const ZTSeries& o) const;
    bool operator==(const ZTSeries& o) const { return coeffs_ == o.coeffs_; }

    /// Multiply by z^a t^shift_t, re-truncating at S. shift_t is 0 or 1.
    ZTSeries mul_scalar_zpow(unsigned a, unsigned shift_t) const;

    /**
     * Divide by (1 - z^a t): returns y with y * (1 - z^a t) == *this up to
     * the truncation level, via the forward recurrence
     *   y_0 = x_0,  y_s = x_s + z^a * y_{s-1}.
     */
    ZTSeries div_one_minus_zt(unsigned a) const;

  private:
    void check_same_truncation(const ZTSeries& o) const;
    std::vector<ZPoly> coeffs_;  // index s = coefficient of t^s
};

}  // namespace emd
