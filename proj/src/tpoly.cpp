#include "emd/tpoly.hpp"

#include <algorithm>

namespace emd {

namespace {
const BigRational kZero = 0;
}

TPoly::TPoly(std::initializer_list<BigRational> cs) : coeffs_(cs) { normalize(); }

TPoly::TPoly(std::vector<BigRational> cs) : coeffs_(std::move(cs)) { normalize(); }

TPoly TPoly::constant(const BigRational& c) { return TPoly{c}; }

TPoly TPoly::monomial(const BigRational& c, std::size_t k) {
    std::vector<BigRational> cs(k + 1);
    cs[k] = c;
    return TPoly(std::move(cs));
}

void TPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& TPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigRational TPoly::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

TPoly TPoly::operator+(const TPoly& o) const {
    std::vector<BigRational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return TPoly(std::move(out));
}

TPoly TPoly::operator-(const TPoly& o) const {
    std::vector<BigRational> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return TPoly(std::move(out));
}

TPoly TPoly::operator*(const TPoly& o) const {
    if (is_zero() || o.is_zero()) return TPoly();
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return TPoly(std::move(out));
}

}  // namespace emd
