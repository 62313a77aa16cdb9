#pragma once

#include "sphorb/linalg.hpp"

#include <string>
#include <vector>

namespace sphorb {

/// The root ε_i − ε_j of sl_n, 1-based indices.
struct Root {
    int i = 0;
    int j = 0;

    bool positive() const { return i < j; }
    bool simple() const { return j == i + 1; }
    Root negative() const { return {j, i}; }
    friend bool operator==(const Root&, const Root&) = default;
};

/// α_k = ε_k − ε_{k+1}.
Root simple_root(int k);
/// Sum of the simple roots α_i..α_j, i.e. ε_i − ε_{j+1}.
Root composite_root(int i, int j, int n);
/// The long composite root ε_i − ε_{n−i+1}.
Root long_root(int i, int n);
/// ⟨a, α_k^∨⟩.
int cartan_integer(Root a, int k);

/// Traceless n×n rational matrix, the concrete model of sl_n(R).
class LieElement {
public:
    LieElement() = default;
    explicit LieElement(int n);
    LieElement(int n, RationalMatrix m);

    /// Elementary matrix E_ij (i ≠ j), 1-based.
    static LieElement elementary(int n, int i, int j);
    static LieElement root_vector(int n, Root a) { return elementary(n, a.i, a.j); }
    /// H_{α_k} = E_kk − E_{k+1,k+1}.
    static LieElement coroot(int n, int k);
    /// X_α − X_{−α}.
    static LieElement rotation(int n, Root a);
    static LieElement from_coords(int n, const RationalVector& v);

    int n() const { return n_; }
    const RationalMatrix& matrix() const { return m_; }
    /// Entry (i, j), 1-based.
    const Rational& at(int i, int j) const { return m_(i - 1, j - 1); }
    /// gl_n coordinates, row-major.
    RationalVector coords() const;
    bool is_zero() const { return m_.is_zero_matrix(); }

    LieElement operator-() const;
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& s);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Rational& s) { return a *= s; }
    friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

    /// Expansion in the basis X[i,j], H[k], e.g. "X[4,1] - X[3,2] + 1/2 H[1]".
    std::string name() const;

private:
    int n_ = 0;
    RationalMatrix m_;
};

LieElement bracket(const LieElement& x, const LieElement& y);
/// tr(xy). The Killing form of sl_n is killing_scale(n) times this.
Rational trace_form(const LieElement& x, const LieElement& y);
inline int killing_scale(int n) { return 2 * n; }
bool is_nilpotent(const LieElement& x);

/// Element of SL_n(R) (image of the two-fold cover).
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(int n, RationalMatrix m);
    static GroupElement identity(int n);

    int n() const { return n_; }
    const RationalMatrix& matrix() const { return m_; }
    GroupElement inverse() const;
    /// g x g⁻¹.
    LieElement conjugate(const LieElement& x) const;

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

private:
    int n_ = 0;
    RationalMatrix m_;
};

/// exp(π(X_α − X_{−α})): −1 on the diagonal at positions i and j of α.
GroupElement w_squared(int n, Root a);
GroupElement unipotent_exp(const LieElement& x);
LieElement unipotent_log(const GroupElement& g);

/// Linear span of traceless matrices, with the generators kept as given when independent.
class Subalgebra {
public:
    Subalgebra() = default;
    explicit Subalgebra(int n);

    /// Span of the given elements; dependent ones are dropped.
    static Subalgebra span(int n, const std::vector<LieElement>& elems);
    /// Smallest bracket-closed subspace containing gens.
    static Subalgebra closure(int n, const std::vector<LieElement>& gens);
    static Subalgebra from_space(int n, const RationalSubspace& space);

    int n() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<LieElement>& basis() const { return basis_; }
    const RationalSubspace& space() const { return space_; }

    bool contains(const LieElement& x) const;
    bool contains(const Subalgebra& s) const;
    bool is_closed() const;
    /// [this, s] ⊆ s and this ⊆ s.
    bool is_ideal_of(const Subalgebra& s) const;
    bool is_abelian() const;

    Subalgebra sum(const Subalgebra& o) const;
    Subalgebra intersection(const Subalgebra& o) const;
    /// dim(a + b) = dim a + dim b.
    bool independent_of(const Subalgebra& o) const { return sum(o).dim() == dim() + o.dim(); }

    /// Coordinates of x in basis(); throws if x is outside.
    RationalVector coordinates(const LieElement& x) const;
    RationalMatrix gram() const;  // trace form on basis()
    /// Names of the basis elements.
    std::vector<std::string> names() const;

    friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.n_ == b.n_ && a.space_ == b.space_; }

private:
    int n_ = 0;
    std::vector<LieElement> basis_;
    RationalSubspace space_;
};

namespace algebras {
Subalgebra full(int n);
Subalgebra cartan(int n);
Subalgebra borel(int n);
Subalgebra upper_nilradical(int n);
Subalgebra lower_nilradical(int n);
/// sl_size on the consecutive indices first..first+size−1, i.e. sl_size(α_first, …).
Subalgebra sl_block(int n, int first, int size);
/// X_α, H_α, X_{−α} for all simple α.
std::vector<LieElement> chevalley_generators(int n);
}  // namespace algebras

}  // namespace sphorb
