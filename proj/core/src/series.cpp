#include "sphorb/series.hpp"

#include <stdexcept>

namespace sphorb {

std::vector<Rational> reciprocal_series(const std::vector<Rational>& f) {
    if (f.empty() || sgn(f[0]) == 0) throw std::invalid_argument("series has no constant term to invert");
    std::vector<Rational> g(f.size());
    g[0] = 1 / f[0];
    for (std::size_t m = 1; m < f.size(); ++m) {
        Rational acc;
        for (std::size_t j = 1; j <= m; ++j) acc += f[j] * g[m - j];
        g[m] = -acc / f[0];
    }
    return g;
}

SeriesCoefficients series_coefficients(int r_max) {
    if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
    const auto len = static_cast<std::size_t>(r_max) + 1;
    // (1 − e^{−T})/T = Σ (−1)^m T^m/(m+1)!   and   (e^T − 1)/T = Σ T^m/(m+1)!
    std::vector<Rational> minus(len), plus(len);
    Integer fact = 1;
    for (std::size_t m = 0; m < len; ++m) {
        fact *= static_cast<unsigned long>(m + 1);
        plus[m] = Rational(1, 1) / Rational(fact);
        minus[m] = m % 2 == 0 ? plus[m] : Rational(-plus[m]);
    }
    return {reciprocal_series(minus), reciprocal_series(plus)};
}

}  // namespace sphorb
