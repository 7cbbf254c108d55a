#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace emd {

// Exact arithmetic substrate. BigInt is an arbitrary-precision signed
// integer, BigRational is kept canonical by GMP: reduced, denominator > 0.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// gmpxx has no long long constructor; long is wide enough here.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

inline BigRational make_rational(long long num, long long den) {
    return make_rational(to_bigint(num), to_bigint(den));
}

/// Parses "3", "-3/4" or decimal strings like "0.0478" into an exact rational.
BigRational parse_rational(const std::string& text);

double to_double(const BigRational& x);

/// n choose k as an exact integer; 0 when k < 0 or k > n.
BigInt binomial(unsigned long n, long k);

BigInt factorial(unsigned long n);

}  // namespace emd
