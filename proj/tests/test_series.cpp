#include <doctest.h>

#include "sphorb/series.hpp"

#include <stdexcept>

using namespace sphorb;

namespace {

/// Bernoulli numbers from Σ_{j<m+1} C(m+1, j) B_j = 0, B_1 = −1/2.
std::vector<Rational> bernoulli(int upto) {
    std::vector<Rational> b(static_cast<std::size_t>(upto) + 1);
    b[0] = 1;
    for (int m = 1; m <= upto; ++m) {
        Rational acc;
        for (int j = 0; j < m; ++j) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
            acc += Rational(c) * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

Rational factorial(int r) {
    Integer f = 1;
    for (int i = 2; i <= r; ++i) f *= i;
    return Rational(f);
}

}  // namespace

TEST_CASE("leading coefficients") {
    SeriesCoefficients s = series_coefficients(12);
    REQUIRE(s.b.size() == 13);
    CHECK(s.b[0] == 1);
    CHECK(s.c[0] == 1);
    CHECK(s.b[1] == frac(1, 2));
    CHECK(s.c[1] == frac(-1, 2));
    CHECK(s.b[2] == frac(1, 12));
    CHECK(s.b[3] == 0);
}

TEST_CASE("coefficients agree with the Bernoulli numbers") {
    const int r_max = 12;
    SeriesCoefficients s = series_coefficients(r_max);
    std::vector<Rational> bern = bernoulli(r_max);
    for (int r = 0; r <= r_max; ++r) {
        auto i = static_cast<std::size_t>(r);
        // T/(e^T − 1) = Σ B_r T^r / r!, and T/(1 − e^{−T}) is the same series at −T
        CHECK(s.c[i] == bern[i] / factorial(r));
        CHECK(s.b[i] == (r % 2 == 0 ? bern[i] : Rational(-bern[i])) / factorial(r));
        if (r >= 2) CHECK(s.b[i] == s.c[i]);
        if (r >= 3 && r % 2 == 1) CHECK(s.b[i] == 0);
    }
}

TEST_CASE("reciprocal series") {
    std::vector<Rational> geometric{1, -1, 0, 0, 0};
    CHECK(reciprocal_series(geometric) == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(reciprocal_series({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(series_coefficients(0), std::invalid_argument);
    CHECK(series_coefficients(1).b.size() == 2);
}
