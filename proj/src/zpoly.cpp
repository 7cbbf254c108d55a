#include "emd/zpoly.hpp"

#include <algorithm>

namespace emd {

namespace {
const BigInt kZero = 0;
}

ZPoly::ZPoly(std::initializer_list<BigInt> cs) : coeffs_(cs) { normalize(); }

ZPoly::ZPoly(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { normalize(); }

void ZPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& ZPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

bool ZPoly::is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c >= 0; });
}

BigInt ZPoly::coeff_sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
}

BigInt ZPoly::weighted_coeff_sum() const {
    BigInt s = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s += BigInt(k) * coeffs_[k];
    return s;
}

ZPoly ZPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> out(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<long>(k));
    return ZPoly(std::move(out));
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return ZPoly(std::move(out));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return ZPoly(std::move(out));
}

}  // namespace emd
