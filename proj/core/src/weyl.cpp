#include "sphorb/weyl.hpp"

#include <ostream>
#include <set>
#include <sstream>

namespace sphorb {

namespace {

/// n!/(n−m)!
Integer falling(int n, int m) {
    Integer r = 1;
    for (int i = 0; i < m; ++i) r *= n - i;
    return r;
}

Integer binomial(int n, int m) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

void bump(std::map<Var, int>& exps, const Var& v, int by) {
    if (by == 0) return;
    int& e = exps[v];
    e += by;
    if (e == 0) exps.erase(v);
}

/// Expands ∂^β y^γ into Σ coef · y^{γ−ν} ∂^{β−ν}, recursing over the variables present in both.
void reorder(std::vector<std::pair<Var, std::pair<int, int>>>::const_iterator it,
             std::vector<std::pair<Var, std::pair<int, int>>>::const_iterator end, Integer coef,
             std::map<Var, int>& coords, std::map<Var, int>& derivs,
             std::vector<std::tuple<Integer, std::map<Var, int>, std::map<Var, int>>>& out) {
    if (it == end) {
        out.emplace_back(coef, coords, derivs);
        return;
    }
    const Var& v = it->first;
    const int beta = it->second.first, gamma = it->second.second;
    for (int nu = 0; nu <= std::min(beta, gamma); ++nu) {
        bump(coords, v, -nu);
        bump(derivs, v, -nu);
        reorder(std::next(it), end, coef * binomial(beta, nu) * falling(gamma, nu), coords, derivs, out);
        bump(coords, v, nu);
        bump(derivs, v, nu);
    }
}

std::string exponent(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

}  // namespace

std::string Var::name() const {
    switch (space) {
        case Space::X: return "x[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case Space::Y: return "y[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case Space::T: return "t";
        case Space::A: return "a";
    }
    return "?";
}

std::size_t Monomial::degree() const {
    std::size_t d = 0;
    for (const auto& [v, e] : coords) d += static_cast<std::size_t>(e);
    for (const auto& [v, e] : derivs) d += static_cast<std::size_t>(e);
    return d;
}

WeylOp::WeylOp(ExactScalar c) { add(Monomial{}, c); }

WeylOp WeylOp::coord(const Var& v) {
    Monomial m;
    m.coords[v] = 1;
    return monomial(ExactScalar(1), m);
}

WeylOp WeylOp::deriv(const Var& v) {
    Monomial m;
    m.derivs[v] = 1;
    return monomial(ExactScalar(1), m);
}

WeylOp WeylOp::atom(const Atom& a) {
    Monomial m;
    m.atoms.push_back(a);
    return monomial(ExactScalar(1), m);
}

WeylOp WeylOp::monomial(ExactScalar c, Monomial m) {
    WeylOp out;
    out.add(m, c);
    return out;
}

bool WeylOp::has_atoms() const {
    for (const auto& [m, c] : terms_)
        if (!m.atoms.empty()) return true;
    return false;
}

std::vector<Var> WeylOp::variables() const {
    std::set<Var> seen;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.coords) seen.insert(v);
        for (const auto& [v, e] : m.derivs) seen.insert(v);
    }
    return {seen.begin(), seen.end()};
}

void WeylOp::add(const Monomial& m, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

WeylOp WeylOp::operator-() const {
    WeylOp out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

WeylOp operator*(const ExactScalar& s, const WeylOp& a) {
    WeylOp out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
    return out;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    WeylOp out;
    using Slot = std::pair<Var, std::pair<int, int>>;
    std::vector<std::tuple<Integer, std::map<Var, int>, std::map<Var, int>>> pieces;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            // ∂^β of the left factor meets y^γ of the right one
            std::vector<Slot> shared;
            for (const auto& [v, beta] : ma.derivs) {
                auto g = mb.coords.find(v);
                if (g != mb.coords.end()) shared.push_back({v, {beta, g->second}});
            }
            std::map<Var, int> coords = mb.coords, derivs = ma.derivs;
            pieces.clear();
            reorder(shared.cbegin(), shared.cend(), Integer(1), coords, derivs, pieces);
            ExactScalar cab = ca * cb;
            for (auto& [coef, cs, ds] : pieces) {
                Monomial m;
                m.coords = ma.coords;
                for (const auto& [v, e] : cs) bump(m.coords, v, e);
                m.derivs = std::move(ds);
                for (const auto& [v, e] : mb.derivs) bump(m.derivs, v, e);
                m.atoms = ma.atoms;
                m.atoms.insert(m.atoms.end(), mb.atoms.begin(), mb.atoms.end());
                out.add(m, ExactScalar(Rational(coef)) * cab);
            }
        }
    return out;
}

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) { return a * b; }

WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

WeylOp product(const std::vector<WeylOp>& factors) {
    WeylOp out(ExactScalar(1));
    for (const auto& f : factors) out = out * f;
    return out;
}

std::string WeylOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> parts;
        if (!c.is_one() || (m.coords.empty() && m.derivs.empty() && m.atoms.empty())) parts.push_back(c.pretty());
        for (const auto& [v, e] : m.coords) parts.push_back(v.name() + exponent(e));
        for (const auto& [v, e] : m.derivs) parts.push_back("∂" + v.name() + exponent(e));
        for (const auto& a : m.atoms) parts.push_back(a.name);
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " · " : "") << parts[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const WeylOp& op) { return os << op.str(); }

}  // namespace sphorb
