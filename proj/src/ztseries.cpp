#include "emd/ztseries.hpp"

#include <stdexcept>

namespace emd {

ZTSeries::ZTSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

ZTSeries ZTSeries::constant(const ZPoly& c, std::size_t truncation) {
    ZTSeries s(truncation);
    s.coeffs_[0] = c;
    return s;
}

bool ZTSeries::is_zero() const {
    for (const ZPoly& p : coeffs_)
        if (!p.is_zero()) return false;
    return true;
}

void ZTSeries::check_same_truncation(const ZTSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("series truncation mismatch");
}

ZTSeries ZTSeries::operator+(const ZTSeries& o) const {
    check_same_truncation(o);
    ZTSeries out(truncation());
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
        out.coeffs_[s] = coeffs_[s] + o.coeffs_[s];
    return out;
}

ZTSeries ZTSeries::operator-(const ZTSeries& o) const {
    check_same_truncation(o);
    ZTSeries out(truncation());
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
        out.coeffs_[s] = coeffs_[s] - o.coeffs_[s];
    return out;
}

ZTSeries ZTSeries::mul_scalar_zpow(unsigned a, unsigned shift_t) const {
    ZTSeries out(truncation());
    for (std::size_t s = shift_t; s < coeffs_.size(); ++s)
        out.coeffs_[s] = coeffs_[s - shift_t].shifted(a);
    return out;
}

ZTSeries ZTSeries::div_one_minus_zt(unsigned a) const {
    ZTSeries out(truncation());
    out.coeffs_[0] = coeffs_[0];
    for (std::size_t s = 1; s < coeffs_.size(); ++s)
        out.coeffs_[s] = coeffs_[s] + out.coeffs_[s - 1].shifted(a);
    return out;
}

}  // namespace emd
