#include <doctest.h>

#include <random>

#include "emd/rational.hpp"
#include "emd/tpoly.hpp"
#include "emd/zpoly.hpp"
#include "emd/ztseries.hpp"

using namespace emd;

namespace {

TPoly random_tpoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 4), num(-9, 9), den(1, 9);
    std::vector<BigRational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (BigRational& c : cs) c = make_rational(num(rng), den(rng));
    return TPoly(std::move(cs));
}

ZTSeries random_series(std::mt19937_64& rng, std::size_t truncation) {
    std::uniform_int_distribution<int> deg(0, 3), val(-5, 5);
    ZTSeries x(truncation);
    for (std::size_t s = 0; s <= truncation; ++s) {
        std::vector<BigInt> cs(static_cast<std::size_t>(deg(rng)) + 1);
        for (BigInt& c : cs) c = val(rng);
        x.set_coeff(s, ZPoly(std::move(cs)));
    }
    return x;
}

}  // namespace

TEST_SUITE_BEGIN("numerics");

TEST_CASE("rational construction stays canonical") {
    BigRational half = make_rational(2, 4);
    CHECK(half.get_num() == 1);
    CHECK(half.get_den() == 2);
    BigRational neg = make_rational(3, -6);
    CHECK(neg.get_num() == -1);
    CHECK(neg.get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic keeps reduced form with positive denominator") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
    for (int i = 0; i < 200; ++i) {
        BigRational a = make_rational(num(rng), den(rng));
        BigRational b = make_rational(num(rng), den(rng));
        for (const BigRational& r : {BigRational(a + b), BigRational(a - b), BigRational(a * b)}) {
            CHECK(r.get_den() > 0);
            BigInt g;
            mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("0.0478") == make_rational(478, 10000));
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-0.5") == make_rational(-1, 2));
    CHECK(parse_rational("12") == BigRational(12));
    CHECK(parse_rational("0.09") == make_rational(9, 100));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x.y"), std::invalid_argument);
}

TEST_CASE("polynomial ring examples") {
    TPoly one_plus_t{1, 1};
    TPoly one_minus_t{1, -1};
    CHECK(one_plus_t + one_minus_t == TPoly{2});
    CHECK(one_plus_t * one_plus_t == TPoly{1, 2, 1});

    TPoly two_t = TPoly::monomial(2, 1);
    TPoly prod = two_t * one_minus_t;
    CHECK(prod == TPoly{0, 2, -2});
    CHECK(prod.eval(2) == -4);
}

TEST_CASE("polynomial normalization drops trailing zeros") {
    TPoly p(std::vector<BigRational>{1, 0, 0});
    CHECK(p.degree() == 0);
    TPoly zero(std::vector<BigRational>{0, 0});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
}

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int i = 0; i < 50; ++i) {
        TPoly a = random_tpoly(rng), b = random_tpoly(rng), c = random_tpoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        BigRational x = make_rational(num(rng), den(rng));
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
        CHECK((a - b).eval(x) == a.eval(x) - b.eval(x));
    }
}

TEST_CASE("series shift by z^a t^shift") {
    ZTSeries one = ZTSeries::constant(ZPoly::one(), 3);
    ZTSeries shifted = one.mul_scalar_zpow(2, 1);
    CHECK(shifted.coeff(0).is_zero());
    CHECK(shifted.coeff(1) == ZPoly{0, 0, 1});

    ZTSeries zero(2);
    CHECK(zero.mul_scalar_zpow(5, 0).is_zero());
    CHECK(zero.mul_scalar_zpow(5, 1).is_zero());

    ZTSeries x(2);
    x.set_coeff(0, ZPoly{1, 1});  // 1 + z
    ZTSeries y = x.mul_scalar_zpow(1, 0);
    CHECK(y.coeff(0) == ZPoly{0, 1, 1});  // z + z^2
}

TEST_CASE("series division by 1 - z^a t") {
    ZTSeries one3 = ZTSeries::constant(ZPoly::one(), 3);
    ZTSeries geo = one3.div_one_minus_zt(0);
    for (std::size_t s = 0; s <= 3; ++s) CHECK(geo.coeff(s) == ZPoly::one());

    ZTSeries one2 = ZTSeries::constant(ZPoly::one(), 2);
    ZTSeries geo_z = one2.div_one_minus_zt(1);
    CHECK(geo_z.coeff(0) == ZPoly{1});
    CHECK(geo_z.coeff(1) == ZPoly{0, 1});
    CHECK(geo_z.coeff(2) == ZPoly{0, 0, 1});

    ZTSeries x(2);
    x.set_coeff(0, ZPoly{1});
    x.set_coeff(1, ZPoly{1});  // 1 + t
    ZTSeries y = x.div_one_minus_zt(1);
    CHECK(y.coeff(0) == ZPoly{1});
    CHECK(y.coeff(1) == ZPoly{1, 1});
    CHECK(y.coeff(2) == ZPoly{0, 1, 1});
}

TEST_CASE("series division multiplies back to the input") {
    std::mt19937_64 rng(99);
    for (unsigned a = 0; a <= 3; ++a) {
        for (int rep = 0; rep < 20; ++rep) {
            ZTSeries x = random_series(rng, 4);
            ZTSeries y = x.div_one_minus_zt(a);
            // y * (1 - z^a t) = y - z^a t y
            CHECK(y - y.mul_scalar_zpow(a, 1) == x);
        }
    }
}

TEST_CASE("series truncation mismatch is an error") {
    ZTSeries a(2), b(3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a - b, std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(34, 4) == 46376);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(factorial(5) == 120);
}

TEST_SUITE_END();
