#pragma once

#include "sphorb/exact.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace sphorb {

/**
 * A coordinate of a realization space. X and Y hold the entries x_{ab}, y_{ab}
 * of the two unipotent spaces put in duality; T is the line coordinate t and
 * A the extra affine coordinate of the odd maximal case.
 */
struct Var {
    enum class Space { X, Y, T, A };
    Space space = Space::Y;
    int a = 0;
    int b = 0;

    static Var x(int a, int b) { return {Space::X, a, b}; }
    static Var y(int a, int b) { return {Space::Y, a, b}; }
    static Var t() { return {Space::T, 0, 0}; }
    static Var affine() { return {Space::A, 0, 0}; }

    std::string name() const;  // "x[1,2]", "y[3,5]", "t", "a"
    friend auto operator<=>(const Var&, const Var&) = default;
};

/**
 * Uninterpreted symbol. Scalar atoms stand for functions on the reductive
 * factor, derivation atoms for d_Z; both commute with every coordinate and ∂.
 */
struct Atom {
    enum class Kind { Scalar, Derivation };
    Kind kind = Kind::Scalar;
    std::string name;

    static Atom scalar(std::string name) { return {Kind::Scalar, std::move(name)}; }
    static Atom derivation(std::string name) { return {Kind::Derivation, std::move(name)}; }
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// y^α ∂^β A₁A₂…; coordinates first, then derivations, then atoms in written order.
struct Monomial {
    std::map<Var, int> coords;
    std::map<Var, int> derivs;
    std::vector<Atom> atoms;

    std::size_t degree() const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of the Weyl algebra over ExactScalar, extended by opaque atoms. Always in normal form.
class WeylOp {
public:
    WeylOp() = default;
    WeylOp(ExactScalar c);  // c · Id

    static WeylOp coord(const Var& v);
    static WeylOp deriv(const Var& v);
    static WeylOp atom(const Atom& a);
    static WeylOp monomial(ExactScalar c, Monomial m);

    const std::map<Monomial, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_atoms() const;
    /// Every variable appearing in a coordinate or derivation slot.
    std::vector<Var> variables() const;

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
    friend WeylOp operator*(const ExactScalar& c, const WeylOp& a);
    friend bool operator==(const WeylOp&, const WeylOp&) = default;

    /// "coef · y[i,j]^a ∂y[i,j]^b · atom" per monomial, joined by " + ".
    std::string str() const;

private:
    void add(const Monomial& m, const ExactScalar& c);
    std::map<Monomial, ExactScalar> terms_;
};

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);
WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b);

/// Left to right product of the factors.
WeylOp product(const std::vector<WeylOp>& factors);

std::ostream& operator<<(std::ostream& os, const WeylOp& op);

}  // namespace sphorb
