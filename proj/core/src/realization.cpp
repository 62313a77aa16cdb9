#include "sphorb/realization.hpp"

#include "sphorb/fourier.hpp"
#include "sphorb/parab.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphorb {

namespace {

ExactScalar two_i_pi() { return ExactScalar(2) * ExactScalar::i() * ExactScalar::pi(); }

bool has(const std::vector<Var>& vars, const Var& v) { return std::find(vars.begin(), vars.end(), v) != vars.end(); }

/// Coordinate that the formula requires; a missing one is a construction bug.
WeylOp need_coord(const std::vector<Var>& vars, const Var& v) {
    if (!has(vars, v)) throw std::logic_error("formula refers to missing coordinate " + v.name());
    return WeylOp::coord(v);
}

WeylOp need_deriv(const std::vector<Var>& vars, const Var& v) {
    if (!has(vars, v)) throw std::logic_error("formula refers to missing coordinate " + v.name());
    return WeylOp::deriv(v);
}

/// v ∂v, required to exist.
WeylOp euler(const std::vector<Var>& vars, const Var& v) { return need_coord(vars, v) * need_deriv(vars, v); }

/// v ∂v, or 0 when the printed sum runs over an index pair that is not a coordinate of the space.
WeylOp euler_if_present(const std::vector<Var>& vars, const Var& v) {
    return has(vars, v) ? WeylOp::coord(v) * WeylOp::deriv(v) : WeylOp();
}

WeylOp half(int num) { return WeylOp(ExactScalar::fraction(num, 2)); }

std::string simple_root_label(int i) { return "X(alpha_" + std::to_string(i) + ")"; }

[[noreturn]] void no_formula(const char* side, const Generator& z, const RealizationSpec& spec) {
    throw std::invalid_argument(std::string("no printed ") + side + " formula for " + z.label() + " at " +
                                spec.orbit.key());
}

bool is_root(const Generator& z, Root r) { return z.kind == Generator::Kind::RootVector && z.root == r; }
bool is_coroot(const Generator& z, int j) { return z.kind == Generator::Kind::Coroot && z.index == j; }

}  // namespace

std::size_t RealizationSpec::reductive_dim() const {
    return static_cast<std::size_t>(reductive_rank * reductive_rank);
}

std::size_t RealizationSpec::variety_dim() const { return reductive_dim() + extra.size() + target.size(); }

RealizationSpec realization_spec(const OrbitDescriptor& d) {
    RealizationSpec s;
    s.orbit = d;
    s.tag = d.realization_case();
    const int n = d.n, k = d.k;
    s.parabolic = k;
    switch (s.tag) {
        case RealizationCase::Generic:
            s.neighbour = k + 1;
            s.reductive_rank = k;
            for (int a = k + 1; a <= n - k; ++a)
                for (int b = n - k; b <= n - 1; ++b) s.target.push_back(Var::y(a, b));
            for (int i = 1; i <= k; ++i) s.source.push_back(Var::x(i, k));
            for (int a = k + 2; a <= n - k; ++a)
                for (int b = n - k; b <= n - 1; ++b) s.source.push_back(Var::x(a, b));
            break;
        case RealizationCase::EvenMaximal: {
            const int p = k;
            s.neighbour = p - 1;
            s.reductive_rank = p - 1;
            for (int i = 1; i <= p - 1; ++i) s.target.push_back(Var::y(i, p - 1));
            for (int j = p + 1; j <= 2 * p - 1; ++j) s.target.push_back(Var::y(p + 1, j));
            for (int row : {p, p + 1})
                for (int j = p + 1; j <= 2 * p - 1; ++j) s.source.push_back(Var::x(row, j));
            s.extra = {Var::t()};
            break;
        }
        case RealizationCase::OddMaximal: {
            const int p = k;
            s.neighbour = p - 1;
            s.reductive_rank = p - 1;
            for (int i = 1; i <= p - 1; ++i) s.target.push_back(Var::y(i, p - 1));
            for (int row : {p + 1, p + 2})
                for (int j = p + 2; j <= 2 * p; ++j) s.target.push_back(Var::y(row, j));
            for (int row : {p, p + 1, p + 2})
                for (int j = p + 2; j <= 2 * p; ++j) s.source.push_back(Var::x(row, j));
            s.extra = {Var::t(), Var::affine()};
            break;
        }
    }
    return s;
}

LieElement Generator::element(int n) const {
    return kind == Kind::Coroot ? LieElement::coroot(n, index) : LieElement::root_vector(n, root);
}

std::string Generator::label() const {
    if (kind == Kind::Coroot) return "H[" + std::to_string(index) + "]";
    return "X[" + std::to_string(root.i) + "," + std::to_string(root.j) + "]";
}

std::vector<Generator> printed_generators(const RealizationSpec& spec) {
    const int n = spec.orbit.n, k = spec.orbit.k;
    std::vector<Generator> out;
    switch (spec.tag) {
        case RealizationCase::Generic:
            out.push_back(Generator::root_vector(simple_root(k)));
            for (int i = 1; i <= k - 1; ++i) out.push_back(Generator::root_vector(simple_root(n - i).negative()));
            for (int j = k + 1; j <= n - 1; ++j) out.push_back(Generator::coroot(j));
            out.push_back(Generator::root_vector(simple_root(n - k).negative()));
            for (int j = n - k; j <= n - 1; ++j) out.push_back(Generator::root_vector(composite_root(k + 1, j, n)));
            break;
        case RealizationCase::EvenMaximal:
            out.push_back(Generator::coroot(k));
            out.push_back(Generator::root_vector(simple_root(k)));
            break;
        case RealizationCase::OddMaximal:
            break;
    }
    return out;
}

std::vector<Generator> printed_psi_generators(const RealizationSpec& spec) {
    const int n = spec.orbit.n, k = spec.orbit.k;
    std::vector<Generator> out;
    if (spec.tag == RealizationCase::Generic) {
        out.push_back(Generator::root_vector(simple_root(k)));
        for (int i = 1; i <= k - 1; ++i) out.push_back(Generator::root_vector(simple_root(n - i).negative()));
    } else if (spec.tag == RealizationCase::EvenMaximal) {
        out.push_back(Generator::coroot(k));
    }
    return out;
}

WeylOp phi_generator(const Generator& z, const RealizationSpec& spec) {
    const int n = spec.orbit.n, k = spec.orbit.k;
    const auto& v = spec.target;
    if (spec.tag == RealizationCase::Generic) {
        if (is_root(z, simple_root(k))) {
            WeylOp sum;
            for (int i = 1; i <= k; ++i)
                sum += WeylOp::atom(Atom::scalar("b[" + std::to_string(i) + "," + std::to_string(k) + "]")) *
                       need_coord(v, Var::y(k + 1, n - i));
            return two_i_pi() * sum;
        }
        for (int i = 1; i <= k - 1; ++i)
            if (is_root(z, simple_root(n - i).negative())) {
                WeylOp out = WeylOp::atom(Atom::derivation("d[" + simple_root_label(i) + "]"));
                for (int s = k + 1; s <= n - k; ++s)
                    out += need_coord(v, Var::y(s, n - i)) * need_deriv(v, Var::y(s, n - i - 1));
                return out;
            }
        if (is_coroot(z, k + 1)) {
            WeylOp out;
            for (int i = 1; i <= k; ++i) {
                out -= euler(v, Var::y(k + 1, n - i));
                out += euler(v, Var::y(k + 2, n - i));
            }
            return out;
        }
        for (int j = k + 2; j <= n - 1; ++j)
            if (is_coroot(z, j)) {
                WeylOp out;
                for (int i = k + 1; i <= j - 1; ++i) out -= euler_if_present(v, Var::y(i, j));
                out -= ExactScalar(2) * euler_if_present(v, Var::y(j, j));
                for (int i = j + 1; i <= n - 1; ++i) out -= euler_if_present(v, Var::y(j + 1, i));
                out -= half(n - 1);
                return out;
            }
        if (is_root(z, simple_root(n - k).negative())) {
            WeylOp out;
            for (int i = k + 1; i <= n - k; ++i)
                for (int j = n - k; j <= n - 1; ++j)
                    out += need_coord(v, Var::y(i, n - k)) * need_coord(v, Var::y(n - k, j)) *
                           need_deriv(v, Var::y(i, j));
            out += ExactScalar::fraction(n - k, 2) * need_coord(v, Var::y(n - k, n - k));
            return out;
        }
        for (int j = n - k; j <= n - 1; ++j)
            if (is_root(z, composite_root(k + 1, j, n)))
                return -(WeylOp::atom(Atom::scalar("a[" + std::to_string(k + 1) + "," + std::to_string(j) + "]")) *
                         need_deriv(v, Var::y(k + 1, j)));
        no_formula("phi", z, spec);
    }
    if (spec.tag == RealizationCase::EvenMaximal) {
        const int p = k;
        if (is_coroot(z, p)) {
            WeylOp out = WeylOp(ExactScalar::fraction(2 * p - 1, 2));
            for (int i = 1; i <= p - 1; ++i) out += euler(v, Var::y(i, p - 1));
            for (int j = p + 1; j <= 2 * p - 1; ++j) out += euler(v, Var::y(p + 1, j));
            out += WeylOp::coord(Var::t()) * WeylOp::deriv(Var::t());
            return out;
        }
        if (is_root(z, simple_root(p))) {
            WeylOp q = ExactScalar(spec.orbit.eps) * WeylOp::coord(Var::t()) * WeylOp::coord(Var::t());
            for (int i = 1; i <= p - 1; ++i)
                q -= need_coord(v, Var::y(i, p - 1)) * need_coord(v, Var::y(p + 1, 2 * p - i));
            return ExactScalar::i() * ExactScalar::pi() * q;
        }
    }
    no_formula("phi", z, spec);
}

WeylOp psi_generator(const Generator& z, const RealizationSpec& spec) {
    const int n = spec.orbit.n, k = spec.orbit.k;
    const auto& v = spec.source;
    if (spec.tag == RealizationCase::Generic) {
        if (is_root(z, simple_root(k))) {
            WeylOp sum;
            for (int i = 1; i <= k; ++i)
                sum += WeylOp::atom(Atom::scalar("b[" + std::to_string(i) + "," + std::to_string(k) + "]")) *
                       need_deriv(v, Var::x(i, k));
            return sum;
        }
        for (int i = 1; i <= k - 1; ++i)
            if (is_root(z, simple_root(n - i).negative())) {
                WeylOp out = WeylOp::atom(Atom::derivation("d[" + simple_root_label(i) + "]"));
                out -= need_coord(v, Var::x(i + 1, k)) * need_deriv(v, Var::x(i, k));
                for (int s = k + 2; s <= n - k; ++s)
                    out += need_coord(v, Var::x(s, n - i)) * need_deriv(v, Var::x(s, n - i - 1));
                return out;
            }
    }
    if (spec.tag == RealizationCase::EvenMaximal && is_coroot(z, k)) {
        const int p = k;
        WeylOp out = half(1) + WeylOp::coord(Var::t()) * WeylOp::deriv(Var::t());
        for (int j = p + 1; j <= 2 * p - 1; ++j) {
            out -= euler(v, Var::x(p, j));
            out += euler(v, Var::x(p + 1, j));
        }
        return out;
    }
    no_formula("psi", z, spec);
}

MatchReport verify_matching(const Generator& z, const RealizationSpec& spec) {
    MatchReport r;
    r.generator = z;
    FourierMap fm = build_fourier(spec);
    r.transported = fourier_conjugate(psi_generator(z, spec), fm);
    r.printed = phi_generator(z, spec);
    r.difference = r.transported - r.printed;
    return r;
}

std::vector<std::string> BracketReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : cases)
        if (!c.ok())
            out.push_back("[" + c.left.label() + ", " + c.right.label() + "]: difference " +
                          (c.commutator - c.expected).str());
    return out;
}

BracketReport verify_bracket_relations(const RealizationSpec& spec) {
    const int n = spec.orbit.n;
    BracketReport rep;
    std::vector<Generator> gens = printed_generators(spec);
    std::vector<WeylOp> phis;
    std::vector<RationalVector> cols;
    for (const auto& g : gens) {
        phis.push_back(phi_generator(g, spec));
        cols.push_back(g.element(n).coords());
    }
    if (gens.empty()) return rep;
    RationalMatrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];

    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (phis[a].has_atoms() || phis[b].has_atoms()) continue;
            LieElement br = bracket(gens[a].element(n), gens[b].element(n));
            auto coeffs = solve(m, br.coords());
            if (!coeffs) continue;
            BracketCase c;
            c.left = gens[a];
            c.right = gens[b];
            c.commutator = weyl_commutator(phis[a], phis[b]);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (sgn((*coeffs)[i]) != 0) {
                    c.expansion[i] = (*coeffs)[i];
                    c.expected += ExactScalar((*coeffs)[i]) * phis[i];
                }
            rep.cases.push_back(std::move(c));
        }
    return rep;
}

WeylOp sl2_cartan() { return WeylOp::coord(Var::t()) * WeylOp::deriv(Var::t()) + half(1); }

WeylOp sl2_raising(int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("sign must be +1 or -1");
    return -(ExactScalar::i() * ExactScalar(eps) * ExactScalar::pi()) * WeylOp::coord(Var::t()) * WeylOp::coord(Var::t());
}

bool sl2_series_check(int eps) {
    WeylOp x = sl2_raising(eps);
    return weyl_commutator(sl2_cartan(), x) == ExactScalar(2) * x;
}

std::vector<LieElement> complement_basis(const RealizationSpec& spec) {
    const int n = spec.orbit.n, m = spec.reductive_rank, p = spec.orbit.k;
    std::vector<LieElement> out;
    if (m >= 2) {
        Subalgebra block = algebras::sl_block(n, 1, m);
        out = block.basis();
    }
    out.push_back(LieElement::coroot(n, m));
    if (spec.tag == RealizationCase::EvenMaximal) out.push_back(LieElement::coroot(n, p));
    if (spec.tag == RealizationCase::OddMaximal) {
        out.push_back(LieElement::coroot(n, p + 1));
        out.push_back(LieElement::root_vector(n, simple_root(p + 1)));
    }
    for (const auto& v : spec.target) out.push_back(LieElement::elementary(n, v.a, v.b + 1));
    return out;
}

bool GkAudit::ok() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

GkAudit gk_dimension_audit(const OrbitDescriptor& d) {
    GkAudit a;
    a.orbit = d;
    a.orbit_dim = orbit_dimension(d);
    const int n = d.n, k = d.k;
    RealizationSpec spec = realization_spec(d);
    ParabolicData par = build_parabolic(k, n);
    a.parabolic_codim = par.p.dim() - parabolic_stabilizer(d, k).dim();
    Subalgebra s = Subalgebra::span(n, complement_basis(spec));
    a.complement_dim = s.dim();
    a.variety_dim = spec.variety_dim();
    const auto kn = static_cast<std::size_t>(k * (n - k));
    a.checks["parabolic orbit dimension is 2k(n-k)"] = a.parabolic_codim == 2 * kn;
    a.checks["complement dimension is k(n-k)"] = a.complement_dim == kn;
    a.checks["complement basis is independent"] = a.complement_dim == complement_basis(spec).size();
    a.checks["complement is a subalgebra of the parabolic"] = par.p.contains(s) && s.is_closed();
    a.checks["twice the variety dimension is the orbit dimension"] =
        2 * a.variety_dim == static_cast<std::size_t>(a.orbit_dim);
    a.checks["variety dimension matches the complement"] = a.variety_dim == a.complement_dim;
    return a;
}

}  // namespace sphorb
