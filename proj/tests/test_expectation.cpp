#include <doctest.h>

#include <cmath>

#include "emd/decimal.hpp"
#include "emd/expectation.hpp"
#include "emd/genfun.hpp"

using namespace emd;

TEST_SUITE_BEGIN("expectation");

TEST_CASE("limiting expected values") {
    CHECK(m_value(1, 1) == 0);
    CHECK(m_value(2, 2) == make_rational(1, 3));
    CHECK(m_value(1, 5) == 2);
    CHECK(m_value(4, 5) == make_rational(32, 35));
    CHECK(render_decimal(m_value(4, 5), 3) == "0.914");
    CHECK_THROWS_AS(m_value(0, 3), std::invalid_argument);
}

TEST_CASE("recursion is symmetric and linear along the first row") {
    for (int p = 1; p <= 12; ++p) {
        CHECK(m_value(1, p) == make_rational(p - 1, 2));
        for (int q = p; q <= 12; ++q) CHECK(m_value(p, q) == m_value(q, p));
    }
}

TEST_CASE("two derivations of the expected value agree") {
    CHECK(m_value_via_n(2, 2) == make_rational(1, 3));
    CHECK(m_value_via_n(3, 3) == make_rational(8, 15));
    CHECK(m_value_via_n(1, 1) == 0);
    for (int p = 1; p <= 12; ++p)
        for (int q = 1; q <= 12; ++q) CHECK(m_value_via_n(p, q) == m_value(p, q));
}

TEST_CASE("unit-normalized limits") {
    CHECK(m_tilde(2) == make_rational(1, 3));
    CHECK(render_decimal(m_tilde(5), 4) == "0.2032");
    CHECK(render_decimal(m_tilde(12), 4) == "0.1293");
    CHECK_THROWS_AS(m_tilde(1), std::invalid_argument);
}

TEST_CASE("finite means decrease toward the limit") {
    const long long table_s[] = {1, 5, 30, 1000, 10000};
    for (int n = 2; n <= 5; ++n) {
        BigRational limit = m_tilde(n);
        BigRational prev = 1;
        for (long long s : table_s) {
            BigRational mean = mean_emd_unit_normalized(n, s);
            CHECK(mean < prev);
            CHECK(mean > limit);
            prev = mean;
        }
    }
}

TEST_CASE("simplex sampler basics") {
    SimplexSample one = sample_uniform_simplex(1, 5);
    REQUIRE(one.point.size() == 1);
    CHECK(one.point[0] == doctest::Approx(1.0));

    SimplexSampler sampler(123);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> p = sampler.sample(6);
        double total = 0;
        for (double x : p) {
            CHECK(x >= 0);
            total += x;
        }
        CHECK(std::fabs(total - 1.0) <= 1e-12);
    }
}

TEST_CASE("sampler is deterministic for a fixed seed") {
    SimplexSample a = sample_uniform_simplex(4, 99);
    SimplexSample b = sample_uniform_simplex(4, 99);
    CHECK(a.point == b.point);
    SimplexSample c = sample_uniform_simplex(4, 100);
    CHECK(a.point != c.point);
}

TEST_CASE("sampler coordinates are exchangeable") {
    SimplexSampler sampler(2718);
    const int trials = 100000;
    std::vector<double> mean(4, 0.0);
    for (int rep = 0; rep < trials; ++rep) {
        std::vector<double> p = sampler.sample(4);
        for (int i = 0; i < 4; ++i) mean[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
    }
    for (double m : mean) CHECK(std::fabs(m / trials - 0.25) < 0.005);
}

TEST_CASE("monte carlo estimate is reproducible") {
    MonteCarloResult a = monte_carlo_mean_emd(2, 1, 31);
    MonteCarloResult b = monte_carlo_mean_emd(2, 1, 31);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == 0);
}

TEST_CASE("monte carlo estimate approaches the expected value") {
    for (int n : {2, 3}) {
        MonteCarloResult r = monte_carlo_mean_emd(n, 200000, 4242);
        double target = to_double(m_value(n, n));
        CHECK(std::fabs(r.estimate - target) <= 4 * r.std_error);
    }
}

TEST_SUITE_END();
