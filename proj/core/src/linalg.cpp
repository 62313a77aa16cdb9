#include "sphorb/linalg.hpp"

namespace sphorb {

Integer bareiss_determinant(IntegerMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(t);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    IntegerMatrix z(n, n);
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c) z(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
        scale *= l;
    }
    return frac(bareiss_determinant(std::move(z)), scale);
}

int det_sign(const RationalMatrix& m) { return sgn(determinant(m)); }

RationalMatrix to_rational(const ExactMatrix& m) {
    return m.map([](const ExactScalar& x) { return x.rational(); });
}

ExactMatrix to_exact(const RationalMatrix& m) {
    return m.map([](const Rational& q) { return ExactScalar(q); });
}

int det_sign_rational(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_rational()) throw std::domain_error("det_sign_rational: non-rational entry " + m(r, c).pretty());
    return det_sign(to_rational(m));
}

}  // namespace sphorb
