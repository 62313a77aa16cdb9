#pragma once

#include "sphorb/lie.hpp"

#include <algorithm>
#include <random>

namespace testsupport {

using namespace sphorb;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240917);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long range = 5) {
    long den = uniform(1, range);
    return frac(uniform(-range, range), den);
}

inline Gaussian random_gaussian() { return {random_rational(), uniform(0, 1) ? random_rational() : Rational(0)}; }

inline ExactScalar random_scalar() {
    std::vector<Gaussian> c(static_cast<std::size_t>(uniform(0, 3)));
    for (auto& g : c) g = random_gaussian();
    return ExactScalar::from_terms(static_cast<int>(uniform(-2, 2)), c);
}

inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols, double density = 0.5) {
    RationalMatrix m(rows, cols);
    std::bernoulli_distribution keep(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng())) m(r, c) = random_rational(3);
    return m;
}

inline LieElement random_element(int n) {
    RationalMatrix m = random_matrix(n, n, 0.6);
    Rational t;
    for (int i = 0; i + 1 < n; ++i) t += m(i, i);
    m(n - 1, n - 1) = -t;
    return LieElement(n, m);
}

inline LieElement random_strictly_upper(int n) {
    LieElement x(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (uniform(0, 1)) x += random_rational(3) * LieElement::elementary(n, i, j);
    return x;
}

/// Product of random integer elementary row operations: integer entries, determinant 1.
inline GroupElement random_unimodular(int n, int steps = 12) {
    RationalMatrix m = RationalMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        int a = static_cast<int>(uniform(0, n - 1));
        int b = static_cast<int>(uniform(0, n - 2));
        if (b >= a) ++b;
        long f = uniform(-2, 2);
        if (f == 0) f = 1;
        for (int c = 0; c < n; ++c) m(a, c) += Rational(f) * m(b, c);
    }
    // a random signed permutation with even sign count keeps det = 1
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng());
    RationalMatrix p(n, n);
    for (int i = 0; i < n; ++i) p(i, perm[i]) = 1;
    if (det_sign(p) < 0) p(0, perm[0]) = -1;
    return GroupElement(n, p * m);
}

}  // namespace testsupport
