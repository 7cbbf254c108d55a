#include <doctest.h>

#include <map>

#include "emd/compositions.hpp"
#include "emd/decimal.hpp"
#include "emd/emd_core.hpp"
#include "emd/genfun.hpp"

using namespace emd;

namespace {

// Independent route: tally emd_discrete over every ordered pair.
std::map<long long, long long> brute_force_histogram(long long s, int n) {
    std::map<long long, long long> counts;
    std::vector<Composition> all = all_compositions(s, n);
    for (const Composition& mu : all)
        for (const Composition& nu : all) ++counts[emd_discrete(mu, nu)];
    return counts;
}

// Expansion of numerator / prod_a (1 - z^a t)^{multiplicity[a]} using only
// the series primitives, bypassing the three-term recursion.
ZTSeries expand_rational(const ZTSeries& numerator, const std::vector<unsigned>& factors) {
    ZTSeries out = numerator;
    for (unsigned a : factors) out = out.div_one_minus_zt(a);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("genfun");

TEST_CASE("base series is the geometric series") {
    ZTSeries h = h_series(1, 1, 5);
    for (std::size_t s = 0; s <= 5; ++s) CHECK(h.coeff(s) == ZPoly::one());
}

TEST_CASE("degree-one coefficient of the 2x2 series") {
    ZTSeries h = h_series(2, 2, 1);
    CHECK(h.coeff(1) == ZPoly{2, 2});  // 2 + 2z
}

TEST_CASE("series matches its displayed closed form, two parts") {
    // (t z + 1) / ((1-t)^2 (1-t z))
    std::size_t S = 10;
    ZTSeries numerator(S);
    numerator.set_coeff(0, ZPoly{1});
    numerator.set_coeff(1, ZPoly{0, 1});
    CHECK(h_series(2, 2, S) == expand_rational(numerator, {0, 0, 1}));
}

TEST_CASE("series matches its displayed closed form, three parts") {
    // (-t^3 z^4 - t^2 (2z+1) z^2 + t (z+2) z + 1) / ((1-t)^3 (1-tz)^2 (1-tz^2))
    std::size_t S = 10;
    ZTSeries numerator(S);
    numerator.set_coeff(0, ZPoly{1});
    numerator.set_coeff(1, ZPoly{0, 2, 1});
    numerator.set_coeff(2, ZPoly{0, 0, -1, -2});
    numerator.set_coeff(3, ZPoly{0, 0, 0, 0, -1});
    CHECK(h_series(3, 3, S) == expand_rational(numerator, {0, 0, 0, 1, 1, 2}));
}

TEST_CASE("series is symmetric in its indices") {
    for (int p = 1; p <= 5; ++p)
        for (int q = p + 1; q <= 5; ++q)
            CHECK(h_series(p, q, 8) == h_series(q, p, 8));
}

TEST_CASE("series coefficients are counts within the diameter") {
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q) {
            ZTSeries h = h_series(p, q, 10);
            for (std::size_t s = 0; s <= 10; ++s) {
                CHECK(h.coeff(s).is_nonnegative());
                CHECK(h.coeff(s).degree() <=
                      static_cast<long>(s) * (std::max(p, q) - 1));
            }
        }
}

TEST_CASE("z = 0 specialization counts identical pairs") {
    // Setting z = 0 keeps only distance-zero pairs: 1/(1-t)^min(p,q).
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q) {
            ZTSeries h = h_series(p, q, 12);
            int low = std::min(p, q);
            for (long long s = 0; s <= 12; ++s) {
                BigInt expected = binomial(static_cast<unsigned long>(s + low - 1), low - 1);
                CHECK(h.coeff(static_cast<std::size_t>(s)).coeff(0) == expected);
            }
        }
}

TEST_CASE("z = 1 specialization matches the pair-count numerator") {
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q) {
            ZTSeries h = h_series(p, q, 20);
            TPoly w = w_poly(p, q);
            for (long long s = 0; s <= 20; ++s) {
                // Coefficient of t^s in W(t)/(1-t)^(p+q-1).
                BigRational expected = 0;
                for (long i = 0; i <= w.degree() && i <= s; ++i)
                    expected += w.coeff(static_cast<std::size_t>(i)) *
                                BigRational(binomial(
                                    static_cast<unsigned long>(s - i + p + q - 2), p + q - 2));
                CHECK(BigRational(h.coeff(static_cast<std::size_t>(s)).coeff_sum()) == expected);
            }
        }
}

TEST_CASE("histogram examples") {
    EmdHistogram tiny = histogram(1, 2);
    CHECK(tiny.counts == std::vector<BigInt>{2, 2});

    EmdHistogram point = histogram(0, 3);
    CHECK(point.counts == std::vector<BigInt>{1});

    EmdHistogram single = histogram(4, 1);
    CHECK(single.counts == std::vector<BigInt>{1});
}

TEST_CASE("histogram equals the brute-force tally") {
    for (long long s = 0; s <= 4; ++s)
        for (int n = 1; n <= 4; ++n) {
            EmdHistogram h = histogram(s, n);
            std::map<long long, long long> brute = brute_force_histogram(s, n);
            BigInt total = 0;
            for (std::size_t k = 0; k < h.counts.size(); ++k) {
                auto it = brute.find(static_cast<long long>(k));
                BigInt expected = it == brute.end() ? BigInt(0) : to_bigint(it->second);
                CHECK(h.counts[k] == expected);
                total += h.counts[k];
            }
            CHECK(total == count_compositions(s, n) * count_compositions(s, n));
        }
}

TEST_CASE("thirty students five grades histogram") {
    EmdHistogram h = histogram(30, 5);
    CHECK(h.total() == BigInt(46376) * 46376);
    CHECK(render_decimal(h.mean(), 4) == "26.2938");
    CHECK(render_decimal(h.unit_normalized_mean(), 6) == "0.219115");
}

TEST_CASE("pair-count numerator polynomials") {
    CHECK(w_poly(1, 1) == TPoly{1});
    CHECK(w_poly(2, 2) == TPoly{1, 1});
    CHECK(w_poly(3, 3).eval(1) == 6);
    for (int p = 1; p <= 8; ++p)
        for (int q = 1; q <= 8; ++q) {
            TPoly w = w_poly(p, q);
            long top = std::min(p, q) - 1;
            CHECK(w.degree() == top);
            for (long i = 0; i <= top; ++i)
                CHECK(w.coeff(static_cast<std::size_t>(i)) ==
                      BigRational(binomial(static_cast<unsigned long>(p - 1), i) *
                                  binomial(static_cast<unsigned long>(q - 1), i)));
        }
}

TEST_CASE("total-EMD numerator polynomials") {
    CHECK(n_poly(1, 1).is_zero());
    CHECK(n_poly(2, 2) == TPoly{0, 2});
    CHECK(n_poly(3, 3) == TPoly{0, 8, 8});
    CHECK(n_poly(4, 4) == TPoly{0, 20, 56, 20});
    for (int p = 1; p <= 5; ++p)
        for (int q = p + 1; q <= 5; ++q)
            CHECK(n_poly(p, q) == n_poly(q, p));
}

TEST_CASE("total EMD over all pairs") {
    CHECK(sum_emd(2, 2, 1) == 2);
    CHECK(sum_emd(3, 4, 0) == 0);
    for (int n = 1; n <= 5; ++n) {
        ZTSeries h = h_series(n, n, 20);
        for (long long s = 0; s <= 20; ++s)
            CHECK(h.coeff(static_cast<std::size_t>(s)).weighted_coeff_sum() ==
                  sum_emd(n, n, s));
    }
}

TEST_CASE("discrete means") {
    CHECK(mean_emd_discrete(2, 2, 1) == make_rational(1, 2));
    CHECK(render_decimal(mean_emd_discrete(5, 5, 30) / BigRational(30 * 4), 6) == "0.219115");
    CHECK(render_decimal(mean_emd_discrete(12, 12, 10000) / BigRational(10000 * 11), 4) ==
          "0.1293");
}

TEST_CASE("unit-normalized means reproduce tabulated values") {
    CHECK(mean_emd_unit_normalized(2, 1) == make_rational(1, 2));
    CHECK(render_decimal(mean_emd_unit_normalized(5, 30), 4) == "0.2191");
    CHECK(render_decimal(mean_emd_unit_normalized(3, 5), 4) == "0.3302");
    CHECK_THROWS_AS(mean_emd_unit_normalized(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(mean_emd_unit_normalized(3, 0), std::invalid_argument);
}

TEST_CASE("palindromic and unimodal checks") {
    for (int n = 1; n <= 12; ++n)
        CHECK(check_palindromic_unimodal(n_poly(n, n)) == std::pair{true, true});
    CHECK(check_palindromic_unimodal(TPoly{1, 2, 1, 5}) == std::pair{false, false});
    CHECK(check_palindromic_unimodal(TPoly{7}) == std::pair{true, true});
    CHECK(check_palindromic_unimodal(TPoly()) == std::pair{true, true});
    // An interior zero between nonzero coefficients breaks unimodality.
    CHECK(check_palindromic_unimodal(TPoly{1, 0, 1}) == std::pair{true, false});
    CHECK(check_palindromic_unimodal(TPoly{1, 2, 2, 1}) == std::pair{true, true});
}

TEST_SUITE_END();
