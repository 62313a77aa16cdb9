#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sphorb {

using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational frac(const Integer& p, const Integer& q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// a + b·i with rational a, b.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Gaussian inverse() const;
    Gaussian conj() const { return {re, -im}; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

    std::string serialize() const;
    static Gaussian parse(std::string_view s);
    std::string pretty() const;
};

/**
 * Element of Q[i][π, 1/π]: a Laurent polynomial in a formal transcendental π
 * with Gaussian-rational coefficients.
 *
 * Stored as the lowest π-exponent plus the dense coefficient list upward.
 * Canonical form strips zero coefficients at both ends; zero is the empty
 * list with exponent 0, so structural equality is value equality.
 */
class ExactScalar {
public:
    ExactScalar() = default;
    template <std::integral I>
    ExactScalar(I v) : ExactScalar(Gaussian(Rational(static_cast<long>(v)))) {}
    ExactScalar(const Rational& q) : ExactScalar(Gaussian(q)) {}
    ExactScalar(const Gaussian& g);

    static ExactScalar i();
    static ExactScalar pi(int power = 1);
    static ExactScalar fraction(long p, long q) { return ExactScalar(frac(p, q)); }
    /// Coefficient c_j multiplies π^(low + j).
    static ExactScalar from_terms(int low, std::vector<Gaussian> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    bool is_gaussian() const { return c_.empty() || (low_ == 0 && c_.size() == 1); }
    /// Single π-power times a nonzero Gaussian rational; exactly the units of the ring.
    bool is_unit() const { return c_.size() == 1; }

    Rational rational() const;  // throws if !is_rational()
    Gaussian gaussian() const;  // throws if !is_gaussian()
    int low_degree() const { return low_; }
    int high_degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<Gaussian>& coefficients() const { return c_; }
    Gaussian coefficient(int power) const;

    ExactScalar normalized() const;
    ExactScalar inverse() const;  // throws std::domain_error unless is_unit()

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }
    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

    /// "low:[g0;g1;...]" with each g as "p/q+(r/s)i".
    std::string serialize() const;
    static ExactScalar parse(std::string_view s);
    /// Human-readable form, e.g. "2iπ", "-1/2", "(1+2i)π^-1".
    std::string pretty() const;

private:
    void canonicalize();

    int low_ = 0;
    std::vector<Gaussian> c_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);
std::ostream& operator<<(std::ostream& os, const Gaussian& g);

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }
inline bool is_invertible(const Rational& q) { return sgn(q) != 0; }
inline bool is_invertible(const ExactScalar& x) { return x.is_unit(); }
inline Rational inverse(const Rational& q) { return 1 / q; }
inline ExactScalar inverse(const ExactScalar& x) { return x.inverse(); }

std::string rational_string(const Rational& q);  // always "p/q"
Rational parse_rational(std::string_view s);

}  // namespace sphorb
