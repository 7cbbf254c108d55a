#pragma once

#include <initializer_list>
#include <vector>

#include "emd/rational.hpp"

namespace emd {

/**
 * Dense univariate polynomial in t with exact rational coefficients.
 * coeffs[i] is the coefficient of t^i; no trailing zeros are stored, the
 * zero polynomial has an empty coefficient vector.
 */
class TPoly {
  public:
    TPoly() = default;
    TPoly(std::initializer_list<BigRational> cs);
    explicit TPoly(std::vector<BigRational> cs);

    static TPoly constant(const BigRational& c);
    /// c * t^k
    static TPoly monomial(const BigRational& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of t^i (zero beyond the stored degree).
    const BigRational& coeff(std::size_t i) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    BigRational eval(const BigRational& x) const;

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    void normalize();
    std::vector<BigRational> coeffs_;
};

}  // namespace emd
