#pragma once

#include "sphorb/exact.hpp"

#include <vector>

namespace sphorb {

/// Taylor coefficients of T/(1 − e^{−T}) (b) and T/(e^T − 1) (c), indices 0..r_max.
struct SeriesCoefficients {
    std::vector<Rational> b;
    std::vector<Rational> c;
};

/// Exact power-series division. Throws std::invalid_argument if r_max < 1.
SeriesCoefficients series_coefficients(int r_max);

/// Coefficients of 1/f for a power series f with f_0 ≠ 0, truncated to the length of f.
std::vector<Rational> reciprocal_series(const std::vector<Rational>& f);

}  // namespace sphorb
