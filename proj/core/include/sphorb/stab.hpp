#pragma once

#include "sphorb/orbit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphorb {

/// Z ↦ tr(defining · Z), optionally tagged with the subalgebra it is restricted to.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(LieElement defining, std::optional<Subalgebra> domain = std::nullopt);
    static LinearForm zero(int n) { return LinearForm(LieElement(n)); }

    int n() const { return defining_.n(); }
    const LieElement& defining() const { return defining_; }
    const std::optional<Subalgebra>& domain() const { return domain_; }

    Rational operator()(const LieElement& z) const { return trace_form(defining_, z); }
    LinearForm restricted(const Subalgebra& s) const { return LinearForm(defining_, s); }
    bool vanishes_on(const Subalgebra& s) const;

private:
    LieElement defining_;
    std::optional<Subalgebra> domain_;
};

Subalgebra centralizer(const LieElement& x);
Subalgebra centralizer_in(const LieElement& x, const Subalgebra& ambient);
/// {Z ∈ ambient : f([Z, Y]) = 0 for all Y ∈ ambient}.
Subalgebra form_stabilizer(const LinearForm& f, const Subalgebra& ambient);
/// {Z ∈ ambient : f([Z, S]) = 0 for all S ∈ sub}.
Subalgebra orthogonal(const Subalgebra& sub, const LinearForm& f, const Subalgebra& ambient);

/**
 * Unipotent radical of an algebraic subalgebra of sl_n, computed as the radical
 * of the trace form restricted to it. The nilpotent ideal is trace-orthogonal
 * to everything, and the form is nondegenerate on any reductive factor.
 */
Subalgebra unipotent_radical(const Subalgebra& s);

/// r ⊆ s bracket-closed, s = r ⊕ unipotent_radical(s), trace form nondegenerate on r.
bool is_reductive_factor(const Subalgebra& r, const Subalgebra& s);

/// sl_{n−2j} on the indices j+1..n−j; zero once n − 2j < 2.
Subalgebra middle_block(int n, int j);
/// The sl_j twisted diagonally between the first and last j indices (sign eps on
/// its last simple root), plus the torus direction H_{α_j} − H_{α_{n−j}}.
Subalgebra twisted_diagonal(int n, int j, int eps);
/// span{X_{−(ε_i − ε_{j+1})} : 1 ≤ i ≤ k ≤ j ≤ n−1}.
Subalgebra outer_radical(int n, int k);
/// span{X_{−(ε_i − ε_{j+1})} : k+1 ≤ i ≤ n−k ≤ j ≤ n−1}; zero when 2k = n.
Subalgebra inner_radical(int n, int k);

struct StabilizerDecomposition {
    Subalgebra full;
    Subalgebra reductive;   // middle_block ⊕ twisted_diagonal
    Subalgebra unipotent;   // outer_radical ⊕ inner_radical
    Subalgebra middle;
    Subalgebra twisted;
    Subalgebra outer;
    Subalgebra inner;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

StabilizerDecomposition verify_stabilizer_decomposition(const OrbitDescriptor& d);

/// ((n−2k−1)(n−2k+2))/2 + k.
int borel_stabilizer_dimension(const OrbitDescriptor& d);
/// Stabilizer in b of the restriction of tr(X_{k,ε} ·) to b.
Subalgebra borel_form_stabilizer(const OrbitDescriptor& d);
bool b_orbit_open(const OrbitDescriptor& d);

struct LagrangianReport {
    Subalgebra space;
    bool meets_centralizer_trivially = false;
    bool isotropic = false;
    bool half_dimension = false;

    bool ok() const { return meets_centralizer_trivially && isotropic && half_dimension; }
};

/// span{X_{ε_i−ε_j} : i ≤ k < j} and its three checks.
LagrangianReport lagrangian_check(const OrbitDescriptor& d);

/// Sign of det of Ad(w²_{ε_1−ε_n}) on the Lagrangian; throws if the space is not preserved.
int orientation_sign(const OrbitDescriptor& d);

struct CharacterSet {
    int group_order = 0;               // 2 or 4
    std::vector<ExactScalar> values;   // value at the generator w²
    bool filtered = false;             // odd case: only characters with value −1 at w⁴
};

CharacterSet admissibility_set(int n, int k);

}  // namespace sphorb
