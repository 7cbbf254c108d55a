#include "emd/genfun.hpp"

#include <cstdlib>
#include <stdexcept>

#include "emd/compositions.hpp"

namespace emd {

ZTSeries h_series(int p, int q, std::size_t truncation) {
    if (p < 1 || q < 1) throw std::invalid_argument("h_series needs p, q >= 1");
    // DP table over (a,b) up to (p,q); row a only needs row a-1, but the
    // sizes in play are small enough to keep the whole table.
    std::vector<std::vector<ZTSeries>> table(
        static_cast<std::size_t>(p) + 1,
        std::vector<ZTSeries>(static_cast<std::size_t>(q) + 1, ZTSeries(truncation)));
    for (int a = 1; a <= p; ++a) {
        for (int b = 1; b <= q; ++b) {
            ZTSeries numerator(truncation);
            if (a == 1 && b == 1) {
                numerator = ZTSeries::constant(ZPoly::one(), truncation);
            } else {
                numerator = table[a - 1][b] + table[a][b - 1] - table[a - 1][b - 1];
            }
            table[a][b] = numerator.div_one_minus_zt(static_cast<unsigned>(std::abs(a - b)));
        }
    }
    return table[p][q];
}

BigInt EmdHistogram::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

BigRational EmdHistogram::mean() const {
    BigInt weighted = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) weighted += BigInt(k) * counts[k];
    return make_rational(weighted, total());
}

BigRational EmdHistogram::unit_normalized_mean() const {
    if (n < 2 || s < 1) throw std::invalid_argument("normalization undefined");
    return mean() / BigRational(to_bigint(s * (n - 1)));
}

EmdHistogram histogram(long long s, int n) {
    if (s < 0 || n < 1) throw std::invalid_argument("histogram needs s >= 0, n >= 1");
    ZTSeries h = h_series(n, n, static_cast<std::size_t>(s));
    const ZPoly& dist = h.coeff(static_cast<std::size_t>(s));
    EmdHistogram out;
    out.s = s;
    out.n = n;
    long long max_value = n > 1 ? s * (n - 1) : 0;
    out.counts.assign(static_cast<std::size_t>(max_value) + 1, 0);
    if (!dist.is_nonnegative())
        throw std::logic_error("distance distribution has a negative count");
    if (dist.degree() > max_value)
        throw std::logic_error("distance distribution exceeds the diameter");
    for (long k = 0; k <= dist.degree(); ++k)
        out.counts[static_cast<std::size_t>(k)] = dist.coeff(static_cast<std::size_t>(k));
    return out;
}

namespace {

// Shared table fill for the W and N recursions; both have the same
// three-term shape, N adds the |p-q| t W(p,q) source term.
struct WnTables {
    std::vector<std::vector<TPoly>> w;
    std::vector<std::vector<TPoly>> n;

    WnTables(int p, int q)
        : w(static_cast<std::size_t>(p) + 1, std::vector<TPoly>(static_cast<std::size_t>(q) + 1)),
          n(w) {
        const TPoly one_minus_t{1, -1};
        const TPoly t = TPoly::monomial(1, 1);
        for (int a = 1; a <= p; ++a) {
            for (int b = 1; b <= q; ++b) {
                if (a == 1 && b == 1) {
                    w[1][1] = TPoly::constant(1);
                    continue;
                }
                w[a][b] = w[a - 1][b] + w[a][b - 1] - one_minus_t * w[a - 1][b - 1];
                n[a][b] = n[a - 1][b] + n[a][b - 1] - one_minus_t * n[a - 1][b - 1] +
                          TPoly::constant(std::abs(a - b)) * t * w[a][b];
            }
        }
    }
};

}  // namespace

TPoly w_poly(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("w_poly needs p, q >= 1");
    return WnTables(p, q).w[p][q];
}

TPoly n_poly(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("n_poly needs p, q >= 1");
    return WnTables(p, q).n[p][q];
}

BigInt sum_emd(int p, int q, long long s) {
    if (s < 0) throw std::invalid_argument("sum_emd needs s >= 0");
    TPoly n = n_poly(p, q);
    // Coefficient of t^s in N(t) / (1-t)^(p+q).
    BigInt acc = 0;
    for (long i = 0; i <= n.degree() && i <= s; ++i) {
        const BigRational& c = n.coeff(static_cast<std::size_t>(i));
        if (c.get_den() != 1)
            throw std::logic_error("total-EMD polynomial has a non-integer coefficient");
        acc += c.get_num() *
               binomial(static_cast<unsigned long>(s - i + p + q - 1), p + q - 1);
    }
    return acc;
}

BigRational mean_emd_discrete(int p, int q, long long s) {
    BigInt pairs = count_compositions(s, p) * count_compositions(s, q);
    return make_rational(sum_emd(p, q, s), pairs);
}

BigRational mean_emd_unit_normalized(int n, long long s) {
    if (n < 2 || s < 1) throw std::invalid_argument("normalization undefined");
    return mean_emd_discrete(n, n, s) / BigRational(to_bigint(s * (n - 1)));
}

std::pair<bool, bool> check_palindromic_unimodal(const TPoly& poly) {
    if (poly.is_zero()) return {true, true};
    std::size_t lo = 0;
    while (poly.coeff(lo) == 0) ++lo;
    std::size_t hi = static_cast<std::size_t>(poly.degree());
    bool palindromic = true;
    for (std::size_t i = lo, j = hi; i < j; ++i, --j)
        if (poly.coeff(i) != poly.coeff(j)) {
            palindromic = false;
            break;
        }
    // Rise to a peak, then fall; a strictly interior dip breaks it.
    std::size_t k = lo;
    while (k < hi && poly.coeff(k) <= poly.coeff(k + 1)) ++k;
    bool unimodal = true;
    for (; k < hi; ++k)
        if (poly.coeff(k) < poly.coeff(k + 1)) {
            unimodal = false;
            break;
        }
    return {palindromic, unimodal};
}

}  // namespace emd
