#pragma once

#include "sphorb/linalg.hpp"
#include "sphorb/realization.hpp"

#include <string>
#include <vector>

namespace sphorb {

/// x ↔ y with F(∂x) = c·2iπ·y and F(x) = −(c·2iπ)⁻¹ ∂y, where c is the pairing value.
struct DualPair {
    Var source;
    Var target;
    ExactScalar pairing;
};

struct FourierMap {
    std::vector<Var> source;
    std::vector<Var> target;
    ExactMatrix pairing;        // f([E_source, E_target]), rows source, columns target
    std::vector<DualPair> pairs;
    std::vector<Var> shared;    // unpaired source variables, sent to the same-named target variable
    std::vector<Var> fixed;     // t, a
    /// Disagreements with the expected dual-pair pattern; empty when the map is sound.
    std::vector<std::string> conflicts;
    bool ok() const { return conflicts.empty(); }

    /// Image of a single source coordinate or derivation.
    WeylOp image_of_coord(const Var& v) const;
    WeylOp image_of_deriv(const Var& v) const;
};

/// Pairing from f_k([X, Y]) on the two unipotent spaces, checked against the expected index pattern.
FourierMap build_fourier(const OrbitDescriptor& d);
FourierMap build_fourier(const RealizationSpec& spec);

/// The algebra homomorphism fixed by the variable rules. Throws std::invalid_argument on y-side input.
WeylOp fourier_conjugate(const WeylOp& op, const FourierMap& fm);

/// Expected index pattern: (x_{ik}, y_{k+1,n−i}) generically, (x_{p,n−i}, y_{i,p−1}) in both maximal cases.
std::vector<std::pair<Var, Var>> expected_dual_pairs(const RealizationSpec& spec);

}  // namespace sphorb
