#pragma once

#include "sphorb/stab.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sphorb {

/// Maximal parabolic p_i (all simple roots but α_i) with its Langlands pieces.
struct ParabolicData {
    int n = 0;
    int i = 0;
    Subalgebra p;
    Subalgebra m;  // sl_i ⊕ sl_{n−i}, block diagonal
    Subalgebra a;  // ℝ H_{α_i}
    Subalgebra nil;  // upper-right i × (n−i) block
};

/// Throws std::logic_error if the pieces fail to be a direct sum or the nilradical is not abelian.
ParabolicData build_parabolic(int i, int n);

/**
 * The four forms attached to (d, i):
 * on_parabolic   tr(X ·) on p_i,
 * on_nilradical  its restriction to n_i,
 * extension      zero on m_i ⊕ a_i and equal to tr(X ·) on n_i,
 * reductive      tr(X ·) on the chain algebra.
 */
struct RestrictedForms {
    LinearForm on_parabolic;
    LinearForm on_nilradical;
    LinearForm extension;
    LinearForm reductive;
};

RestrictedForms restricted_forms(const OrbitDescriptor& d, int i);

/// l_i for i < k, l_k ∩ m_i for k ≤ i ≤ n−k, l_{n−i} beyond.
Subalgebra chain_algebra(const OrbitDescriptor& d, int i);
/// v_{i,1}, v_{k,ε} ∩ m_i or v_{n−i,1} on the same three ranges.
Subalgebra twisted_complement(const OrbitDescriptor& d, int i);
/// chain_algebra ⊕ twisted_complement.
Subalgebra reductive_candidate(const OrbitDescriptor& d, int i);
/// Stabilizer in p_i of the nilradical form.
Subalgebra witness_algebra(const OrbitDescriptor& d, int i);
/// p_i ∩ g(X).
Subalgebra parabolic_stabilizer(const OrbitDescriptor& d, int i);

/// Orthogonal of sub inside ambient for B_q(Z, Y) = q([Z, Y]) lies in sub.
bool coisotropic(const Subalgebra& sub, const LinearForm& q, const Subalgebra& ambient);
/// Coisotropic and sub = ambient(q) + unipotent radical of sub.
bool strongly_unipotent(const Subalgebra& sub, const LinearForm& q, const Subalgebra& ambient);
/**
 * A reductive factor of ambient(q) inside ker q, and witness strongly unipotent.
 * With a candidate, the candidate itself is checked. Without one, the only test is
 * whether q vanishes on all of ambient(q), which is sufficient but not necessary.
 */
bool unipotent_type(const LinearForm& q, const Subalgebra& ambient, const Subalgebra& witness,
                    const std::optional<Subalgebra>& reductive = std::nullopt);

enum class DufloBranch { Induced, Unipotent };
std::string to_string(DufloBranch b);

struct DufloEntry {
    int i = 0;
    DufloBranch branch = DufloBranch::Induced;
    bool unipotent_type = false;
    int mirror = 0;  // n − i
    LinearForm form;    // extension form on the induced branch, on_parabolic otherwise
    LinearForm lambda;  // reductive form; zero on the unipotent branch
    Subalgebra chain;
};

struct DufloParameters {
    OrbitDescriptor orbit;
    std::vector<DufloEntry> entries;  // i = 1..n−1
};

DufloParameters duflo_classification(const OrbitDescriptor& d);

/// Every check made for one (d, i), by name.
struct WitnessReport {
    int i = 0;
    std::map<std::string, bool> checks;
    bool ok() const;
    std::vector<std::string> failures() const;
};

WitnessReport verify_witness(const OrbitDescriptor& d, int i);

struct ChainReport {
    std::vector<Subalgebra> algebras;  // chain_algebra for i = 1..k
    std::vector<int> ranks;
    std::vector<int> expected_ranks;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Nested chain with ranks dim(g_{i,k} ∩ cartan), checked against the closed rank formulas.
ChainReport recursion_chain(const OrbitDescriptor& d);

/// For each simple root index s, a parabolic index i with X_{−α_s} ∈ p_i.
struct GeneratorCoverage {
    std::map<int, int> index_for_root;
    std::size_t generated_dimension = 0;
    bool ok() const;
    int n = 0;
};

GeneratorCoverage generator_coverage(int n);

struct AmalgamationReport {
    int i = 0;
    int j = 0;
    std::size_t parabolic_dim = 0;
    std::size_t stabilizer_dim = 0;
    std::size_t c_dim = 0;
    /// Stabilizer of the form restricted to the nilradical; always contains c.
    std::size_t nil_stabilizer_dim = 0;
    bool nil_stabilizer_strongly_unipotent = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// For i < k, i+1 ≤ j ≤ n−i−1: g_{j,k} ⊕ (g_{i,k} ∩ n_j) is strongly unipotent in g_{i,k} ∩ p_j.
std::vector<AmalgamationReport> amalgamation_check(const OrbitDescriptor& d);

/// Abstract parameter labels. Equality is structural.
struct ParameterToken {
    enum class Kind { Character, DiscreteSeries, Opaque };
    Kind kind = Kind::Opaque;
    ExactScalar value;   // character value at w²
    int sign = 1;        // discrete series: sign of the half-integer
    int twice = 0;       // discrete series: m in τ_{sign·m/2}
    std::string label;   // opaque factor, e.g. "rho(-i)"

    static ParameterToken character(ExactScalar v);
    static ParameterToken discrete_series(ExactScalar character_value, int sign, int m);
    static ParameterToken opaque(std::string label, ExactScalar character_value = ExactScalar(1));

    std::string str() const;
    friend bool operator==(const ParameterToken& a, const ParameterToken& b) {
        return a.kind == b.kind && a.value == b.value && a.sign == b.sign && a.twice == b.twice && a.label == b.label;
    }
};

/// τ_1..τ_{n−1}; tokens[0] is τ_1.
struct ParameterFamily {
    std::vector<ParameterToken> tokens;
    const ParameterToken& at(int i) const { return tokens.at(static_cast<std::size_t>(i - 1)); }
};

struct FamilyCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> failing;
    std::string reason;
};

FamilyCheck parameter_family_check(const ParameterFamily& fam, const OrbitDescriptor& d);

/// m with m ≡ 1 − ε′ (mod 4) and m ≠ 0, for |m| ≤ bound.
std::vector<int> discrete_series_indices(int eps_prime, int bound);

}  // namespace sphorb
