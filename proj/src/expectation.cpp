#include "emd/expectation.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "emd/emd_core.hpp"
#include "emd/genfun.hpp"

namespace emd {

BigRational m_value(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("m_value needs p, q >= 1");
    std::vector<std::vector<BigRational>> m(
        static_cast<std::size_t>(p) + 1,
        std::vector<BigRational>(static_cast<std::size_t>(q) + 1, BigRational(0)));
    for (int a = 1; a <= p; ++a)
        for (int b = 1; b <= q; ++b)
            m[a][b] = ((a - 1) * m[a - 1][b] + (b - 1) * m[a][b - 1] + std::abs(a - b)) /
                      BigRational(a + b - 1);
    return m[p][q];
}

BigRational m_value_via_n(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("m_value needs p, q >= 1");
    BigRational scale = make_rational(
        factorial(static_cast<unsigned long>(p - 1)) * factorial(static_cast<unsigned long>(q - 1)),
        factorial(static_cast<unsigned long>(p + q - 1)));
    return scale * n_poly(p, q).eval(1);
}

BigRational m_tilde(int n) {
    if (n < 2) throw std::invalid_argument("m_tilde needs n >= 2");
    return m_value(n, n) / BigRational(n - 1);
}

std::vector<double> SimplexSampler::sample(int n) {
    if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
    std::vector<double> point(static_cast<std::size_t>(n));
    double total = 0;
    for (double& x : point) {
        double u = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        x = -std::log(u);
        total += x;
    }
    for (double& x : point) x /= total;
    return point;
}

SimplexSample sample_uniform_simplex(int n, std::uint64_t seed) {
    SimplexSampler sampler(seed);
    return SimplexSample{sampler.sample(n)};
}

MonteCarloResult monte_carlo_mean_emd(int n, long long trials, std::uint64_t seed) {
    if (n < 2 || trials < 1)
        throw std::invalid_argument("monte_carlo_mean_emd needs n >= 2, trials >= 1");
    SimplexSampler sampler(seed);
    // Welford accumulation keeps the variance numerically stable.
    double mean = 0, m2 = 0;
    for (long long k = 1; k <= trials; ++k) {
        std::vector<double> a = sampler.sample(n);
        std::vector<double> b = sampler.sample(n);
        double d = emd_continuous(a, b);
        double delta = d - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (d - mean);
    }
    MonteCarloResult out;
    out.estimate = mean;
    if (trials > 1) {
        double variance = m2 / static_cast<double>(trials - 1);
        out.std_error = std::sqrt(variance / static_cast<double>(trials));
    }
    return out;
}

}  // namespace emd
