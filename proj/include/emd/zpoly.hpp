#pragma once

#include <initializer_list>
#include <vector>

#include "emd/rational.hpp"

namespace emd {

/**
 * Dense univariate polynomial in z with arbitrary-precision integer
 * coefficients; coeffs[k] is the coefficient of z^k. Used for the inner
 * distance-distribution polynomials, whose coefficients are pair counts.
 */
class ZPoly {
  public:
    ZPoly() = default;
    ZPoly(std::initializer_list<BigInt> cs);
    explicit ZPoly(std::vector<BigInt> cs);

    static ZPoly one() { return ZPoly{1}; }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& coeff(std::size_t k) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// True when every coefficient is >= 0 (counts stay non-negative).
    bool is_nonnegative() const;

    /// Sum of all coefficients (the value at z = 1).
    BigInt coeff_sum() const;
    /// Sum of k * coeff(k) (derivative at z = 1).
    BigInt weighted_coeff_sum() const;

    ZPoly shifted(std::size_t k) const;  // multiply by z^k

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace emd
