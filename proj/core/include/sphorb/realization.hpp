#pragma once

#include "sphorb/lie.hpp"
#include "sphorb/orbit.hpp"
#include "sphorb/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sphorb {

/**
 * Coordinates of the two realizations glued by the partial Fourier transform.
 * Each x/y variable with indices (a, b) is the coordinate on X_{β_{ab}} = E_{a,b+1}.
 * target: the y-space on which φ acts (u_k, or u_p in the maximal cases).
 * source: the x-space of the neighbouring parabolic (u_{k+1}, or u_{p−1}).
 * extra:  t (maximal cases) and a (odd maximal).
 */
struct RealizationSpec {
    OrbitDescriptor orbit;
    RealizationCase tag = RealizationCase::Generic;
    int parabolic = 0;          // index of the parabolic realized on the target
    int neighbour = 0;          // index of the parabolic realized on the source
    int reductive_rank = 0;     // r_{Q,m} = sl_m ⊕ R H_{α_m} with m = reductive_rank
    std::vector<Var> target;
    std::vector<Var> source;
    std::vector<Var> extra;

    std::size_t reductive_dim() const;
    /// dim r_Q + extra coordinates + unipotent coordinates.
    std::size_t variety_dim() const;
};

RealizationSpec realization_spec(const OrbitDescriptor& d);

/// A Chevalley generator X_α or H_{α_j}, labelled by role.
struct Generator {
    enum class Kind { RootVector, Coroot };
    Kind kind = Kind::RootVector;
    Root root;      // RootVector
    int index = 0;  // Coroot

    static Generator root_vector(Root r) { return {Kind::RootVector, r, 0}; }
    static Generator coroot(int j) { return {Kind::Coroot, {}, j}; }

    LieElement element(int n) const;
    std::string label() const;  // "X[1,3]", "H[4]"
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators with a printed φ-formula for the case; empty for the odd maximal case.
std::vector<Generator> printed_generators(const RealizationSpec& spec);
/// Generators with a printed ψ-formula.
std::vector<Generator> printed_psi_generators(const RealizationSpec& spec);

/// Printed φ(Z) on the target space. Throws std::invalid_argument if Z has no printed formula.
WeylOp phi_generator(const Generator& z, const RealizationSpec& spec);
/// Printed ψ(Z) on the source space. Throws std::invalid_argument if Z has no printed formula.
WeylOp psi_generator(const Generator& z, const RealizationSpec& spec);

struct MatchReport {
    Generator generator;
    WeylOp transported;  // F(ψ(Z))
    WeylOp printed;      // φ(Z)
    WeylOp difference;   // transported − printed
    bool ok() const { return difference.is_zero(); }
};

/// F(ψ(Z)) against φ(Z).
MatchReport verify_matching(const Generator& z, const RealizationSpec& spec);

struct BracketCase {
    Generator left;
    Generator right;
    std::map<std::size_t, Rational> expansion;  // [Z₁, Z₂] over printed_generators indices
    WeylOp commutator;                          // [φ(Z₁), φ(Z₂)]
    WeylOp expected;                            // Σ c φ(Z)
    bool ok() const { return commutator == expected; }
};

struct BracketReport {
    std::vector<BracketCase> cases;
    std::vector<std::string> failures() const;
    bool ok() const { return failures().empty(); }
};

/// Pairs of printed generators with atom-free φ whose bracket is a combination of printed generators.
BracketReport verify_bracket_relations(const RealizationSpec& spec);

/// [t∂_t + ½, −iεπt²] = 2(−iεπt²).
bool sl2_series_check(int eps);
/// The operators of that check, for display.
WeylOp sl2_cartan();
WeylOp sl2_raising(int eps);

struct GkAudit {
    OrbitDescriptor orbit;
    int orbit_dim = 0;
    std::size_t parabolic_codim = 0;  // dim p_k − dim(p_k ∩ centralizer)
    std::size_t complement_dim = 0;   // dim s_k by basis count
    std::size_t variety_dim = 0;      // dim 𝕏_k
    std::map<std::string, bool> checks;
    bool ok() const;
};

GkAudit gk_dimension_audit(const OrbitDescriptor& d);

/// Basis of s_k: r_Q, the extra directions and the unipotent coordinates.
std::vector<LieElement> complement_basis(const RealizationSpec& spec);

}  // namespace sphorb
