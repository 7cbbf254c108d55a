#include "emd/decimal.hpp"

#include <stdexcept>

namespace emd {

std::string render_decimal(const BigRational& x, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    bool negative = x < 0;
    BigInt num = abs(x.get_num());
    const BigInt& den = x.get_den();

    BigInt pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;

    // q = round(num * 10^digits / den), ties to even.
    BigInt scaled = num * pow10;
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    BigInt twice_r = 2 * r;
    if (twice_r > den || (twice_r == den && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    BigInt whole = q / pow10;
    BigInt frac = q % pow10;
    std::string frac_str = frac.get_str();
    frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');

    std::string out;
    if (negative && q != 0) out += '-';
    out += whole.get_str();
    out += '.';
    out += frac_str;
    return out;
}

}  // namespace emd
