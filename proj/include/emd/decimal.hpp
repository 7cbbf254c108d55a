#pragma once

#include <string>

#include "emd/rational.hpp"

namespace emd {

/// Correctly rounded fixed-point decimal string with the given number of
/// fractional digits, rounding ties to even.
std::string render_decimal(const BigRational& x, int digits);

}  // namespace emd
