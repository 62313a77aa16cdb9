#include "sphorb/orbit.hpp"

#include <stdexcept>

namespace sphorb {

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::string to_string(RealizationCase c) {
    switch (c) {
        case RealizationCase::Generic: return "generic";
        case RealizationCase::EvenMaximal: return "even-maximal";
        case RealizationCase::OddMaximal: return "odd-maximal";
    }
    return "?";
}

OrbitDescriptor OrbitDescriptor::make(int n, int k, int eps) {
    if (n < 4) throw std::out_of_range("orbit catalog needs n >= 4");
    if (k < 2 || 2 * k > n) throw std::out_of_range("orbit order k must satisfy 2 <= k <= n/2");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    return {n, k, 2 * k == n ? eps : 1};
}

RealizationCase OrbitDescriptor::realization_case() const {
    if (2 * k == n) return RealizationCase::EvenMaximal;
    if (2 * k + 1 == n) return RealizationCase::OddMaximal;
    return RealizationCase::Generic;
}

std::string OrbitDescriptor::key() const {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " eps=" + (eps > 0 ? "+1" : "-1");
}

std::vector<OrbitDescriptor> catalog(int n) {
    std::vector<OrbitDescriptor> out;
    for (int k = 2; 2 * k <= n; ++k) {
        out.push_back(OrbitDescriptor::make(n, k, 1));
        if (2 * k == n) out.push_back(OrbitDescriptor::make(n, k, -1));
    }
    return out;
}

Partition spherical_partition(int k, int n) {
    if (k < 1 || 2 * k > n) throw std::out_of_range("spherical partition needs 1 <= k <= n/2");
    Partition p(k, 2);
    p.insert(p.end(), n - 2 * k, 1);
    return p;
}

int orbit_dimension(const OrbitDescriptor& d) { return 2 * d.k * (d.n - d.k); }

LieElement representative_Y(const OrbitDescriptor& d) {
    LieElement y(d.n);
    for (int i = 0; i + 2 <= d.k; ++i) y += LieElement::elementary(d.n, 2 * i + 1, 2 * i + 2);
    y += Rational(d.eps) * LieElement::elementary(d.n, 2 * d.k - 1, 2 * d.k);
    return y;
}

LieElement representative_X(const OrbitDescriptor& d) {
    LieElement x(d.n);
    for (int i = 1; i < d.k; ++i) x += LieElement::root_vector(d.n, long_root(i, d.n).negative());
    x += Rational(d.eps) * LieElement::root_vector(d.n, long_root(d.k, d.n).negative());
    return x;
}

Partition jordan_type(const LieElement& x) {
    if (!is_nilpotent(x)) throw std::domain_error("jordan_type: element is not nilpotent");
    const int n = x.n();
    std::vector<int> r(n + 2, 0);
    RationalMatrix p = RationalMatrix::identity(n);
    r[0] = n;
    for (int j = 1; j <= n; ++j) {
        p = p * x.matrix();
        r[j] = static_cast<int>(rank(p));
    }
    Partition out;
    for (int j = n; j >= 1; --j) {
        int at_least_j = r[j - 1] - r[j];
        int at_least_next = r[j] - r[j + 1];
        out.insert(out.end(), at_least_j - at_least_next, j);
    }
    return out;
}

int epsilon_invariant(const LieElement& x) {
    const int n = x.n();
    if (n % 2 != 0 || jordan_type(x) != Partition(n / 2, 2))
        throw std::invalid_argument("epsilon_invariant needs Jordan type (2^p) in sl_2p");
    const int p = n / 2;
    std::vector<RationalVector> v = nullspace(x.matrix());
    RationalSubspace span(n, v);
    std::vector<RationalVector> w;
    for (int e = 0; e < n && static_cast<int>(w.size()) < p; ++e) {
        RationalVector unit(n);
        unit[e] = 1;
        if (span.insert(unit)) w.push_back(unit);
    }
    RationalMatrix frame(n, n);
    for (int c = 0; c < p; ++c)
        for (int r = 0; r < n; ++r) {
            frame(r, c) = v[c][r];
            frame(r, p + c) = w[c][r];
        }
    if (det_sign(frame) < 0)
        for (auto& a : w[0]) a = -a;
    RationalMatrix vmat(n, p);
    for (int c = 0; c < p; ++c)
        for (int r = 0; r < n; ++r) vmat(r, c) = v[c][r];
    RationalMatrix induced(p, p);
    for (int c = 0; c < p; ++c) {
        auto coords = solve(vmat, x.matrix().apply(w[c]));
        if (!coords) throw std::logic_error("image of x is not inside its kernel");
        for (int r = 0; r < p; ++r) induced(r, c) = (*coords)[r];
    }
    return det_sign(induced);
}

bool same_real_orbit(const LieElement& x, const LieElement& y) {
    if (x.n() != y.n()) return false;
    Partition px = jordan_type(x);
    if (px != jordan_type(y)) return false;
    if (x.n() % 2 == 0 && px == Partition(x.n() / 2, 2)) return epsilon_invariant(x) == epsilon_invariant(y);
    return true;
}

}  // namespace sphorb
