#pragma once

#include "sphorb/lie.hpp"

#include <string>
#include <vector>

namespace sphorb {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

std::string to_string(const Partition& p);

/// Shape of the operator realization attached to an orbit.
enum class RealizationCase { Generic, EvenMaximal, OddMaximal };

std::string to_string(RealizationCase c);

/// A non-minimal spherical nilpotent orbit of sl_n(R): Jordan type (2^k, 1^{n−2k}), 2 ≤ k ≤ n/2.
struct OrbitDescriptor {
    int n = 0;
    int k = 0;
    int eps = 1;

    /// Validates the range and folds eps to +1 unless 2k = n.
    static OrbitDescriptor make(int n, int k, int eps = 1);

    bool has_sign() const { return 2 * k == n; }
    RealizationCase realization_case() const;
    std::string key() const;  // "n=6 k=3 eps=-1"

    friend bool operator==(const OrbitDescriptor&, const OrbitDescriptor&) = default;
    friend auto operator<=>(const OrbitDescriptor& a, const OrbitDescriptor& b) {
        if (a.n != b.n) return a.n <=> b.n;
        if (a.k != b.k) return a.k <=> b.k;
        return b.eps <=> a.eps;  // +1 before −1
    }
};

/// All (k, ε) in the index set, ordered by k then ε = +1 before −1.
std::vector<OrbitDescriptor> catalog(int n);

Partition spherical_partition(int k, int n);
int orbit_dimension(const OrbitDescriptor& d);

/// Σ_{i<k} X_{α_{2i−1}} + ε X_{α_{2k−1}}.
LieElement representative_Y(const OrbitDescriptor& d);
/// Σ_{i<k} X_{−(ε_i − ε_{n−i+1})} + ε X_{−(ε_k − ε_{n−k+1})}.
LieElement representative_X(const OrbitDescriptor& d);

/// Block sizes recovered from ranks of powers; throws on non-nilpotent input.
Partition jordan_type(const LieElement& x);

/**
 * For x of type (2^p) in sl_{2p}: choose a basis v of ker x and a complement w
 * with det[v|w] > 0; x maps span(w) isomorphically onto ker x and the result is
 * the sign of det of that map in the bases w, v. Invariant under SL_n conjugation.
 */
int epsilon_invariant(const LieElement& x);

bool same_real_orbit(const LieElement& x, const LieElement& y);

}  // namespace sphorb
