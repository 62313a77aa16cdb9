#include "sphorb/stab.hpp"

#include <stdexcept>

namespace sphorb {

namespace {

std::vector<LieElement> combine(const Subalgebra& s, const std::vector<RationalVector>& coeffs) {
    std::vector<LieElement> out;
    for (const auto& c : coeffs) {
        LieElement z(s.n());
        for (std::size_t j = 0; j < c.size(); ++j)
            if (sgn(c[j]) != 0) z += c[j] * s.basis()[j];
        out.push_back(std::move(z));
    }
    return out;
}

/// Kernel of Z ↦ (tr([F, Z] T_t))_t for Z ranging over the ambient basis.
Subalgebra pairing_kernel(const LieElement& f, const Subalgebra& ambient, const Subalgebra& tests) {
    const std::size_t d = ambient.dim();
    RationalMatrix a(tests.dim(), d);
    for (std::size_t s = 0; s < d; ++s) {
        LieElement c = bracket(f, ambient.basis()[s]);
        if (c.is_zero()) continue;
        for (std::size_t t = 0; t < tests.dim(); ++t) a(t, s) = trace_form(c, tests.basis()[t]);
    }
    return Subalgebra::span(ambient.n(), combine(ambient, nullspace(a)));
}

}  // namespace

LinearForm::LinearForm(LieElement defining, std::optional<Subalgebra> domain)
    : defining_(std::move(defining)), domain_(std::move(domain)) {
    if (domain_ && domain_->n() != defining_.n()) throw std::invalid_argument("form and domain live in different sl_n");
}

bool LinearForm::vanishes_on(const Subalgebra& s) const {
    for (const auto& z : s.basis())
        if (sgn((*this)(z)) != 0) return false;
    return true;
}

Subalgebra centralizer_in(const LieElement& x, const Subalgebra& ambient) {
    const std::size_t m = static_cast<std::size_t>(x.n()) * x.n();
    RationalMatrix a(m, ambient.dim());
    for (std::size_t s = 0; s < ambient.dim(); ++s) {
        RationalVector v = bracket(ambient.basis()[s], x).coords();
        for (std::size_t r = 0; r < m; ++r) a(r, s) = v[r];
    }
    return Subalgebra::span(x.n(), combine(ambient, nullspace(a)));
}

Subalgebra centralizer(const LieElement& x) { return centralizer_in(x, algebras::full(x.n())); }

Subalgebra form_stabilizer(const LinearForm& f, const Subalgebra& ambient) {
    return pairing_kernel(f.defining(), ambient, ambient);
}

Subalgebra orthogonal(const Subalgebra& sub, const LinearForm& f, const Subalgebra& ambient) {
    return pairing_kernel(f.defining(), ambient, sub);
}

Subalgebra unipotent_radical(const Subalgebra& s) {
    return Subalgebra::span(s.n(), combine(s, nullspace(s.gram())));
}

bool is_reductive_factor(const Subalgebra& r, const Subalgebra& s) {
    if (!s.contains(r) || !r.is_closed()) return false;
    Subalgebra rad = unipotent_radical(s);
    if (r.dim() + rad.dim() != s.dim() || !r.independent_of(rad)) return false;
    return sgn(determinant(r.gram())) != 0;
}

Subalgebra middle_block(int n, int j) {
    if (n - 2 * j < 2) return Subalgebra(n);
    return algebras::sl_block(n, j + 1, n - 2 * j);
}

Subalgebra twisted_diagonal(int n, int j, int eps) {
    std::vector<LieElement> gens;
    for (int i = 1; i < j; ++i) {
        Rational s = i == j - 1 ? Rational(eps) : Rational(1);
        gens.push_back(LieElement::root_vector(n, simple_root(i)) + s * LieElement::root_vector(n, simple_root(n - i).negative()));
        gens.push_back(LieElement::root_vector(n, simple_root(i).negative()) + s * LieElement::root_vector(n, simple_root(n - i)));
    }
    Subalgebra sl = Subalgebra::closure(n, gens);
    LieElement torus = LieElement::coroot(n, j) - LieElement::coroot(n, n - j);
    return sl.sum(Subalgebra::span(n, {torus}));
}

Subalgebra outer_radical(int n, int k) {
    std::vector<LieElement> v;
    for (int i = 1; i <= k; ++i)
        for (int j = k; j <= n - 1; ++j) v.push_back(LieElement::root_vector(n, composite_root(i, j, n).negative()));
    return Subalgebra::span(n, v);
}

Subalgebra inner_radical(int n, int k) {
    if (2 * k >= n) return Subalgebra(n);
    std::vector<LieElement> v;
    for (int i = k + 1; i <= n - k; ++i)
        for (int j = n - k; j <= n - 1; ++j)
            if (i <= j) v.push_back(LieElement::root_vector(n, composite_root(i, j, n).negative()));
    return Subalgebra::span(n, v);
}

StabilizerDecomposition verify_stabilizer_decomposition(const OrbitDescriptor& d) {
    const int n = d.n, k = d.k;
    StabilizerDecomposition out;
    auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };

    out.full = centralizer(representative_X(d));
    out.middle = middle_block(n, k);
    out.twisted = twisted_diagonal(n, k, d.eps);
    out.outer = outer_radical(n, k);
    out.inner = inner_radical(n, k);
    out.reductive = out.middle.sum(out.twisted);
    out.unipotent = out.outer.sum(out.inner);

    const std::pair<const char*, const Subalgebra*> pieces[] = {
        {"middle sl block", &out.middle},
        {"twisted diagonal", &out.twisted},
        {"outer radical", &out.outer},
        {"inner radical", &out.inner},
    };
    for (const auto& [name, s] : pieces) {
        if (!out.full.contains(*s)) fail(std::string(name) + " is not inside the centralizer");
        if (!s->is_closed()) fail(std::string(name) + " is not bracket-closed");
    }
    if (out.reductive.dim() != out.middle.dim() + out.twisted.dim()) fail("middle block and twisted diagonal overlap");
    if (out.unipotent.dim() != out.outer.dim() + out.inner.dim()) fail("outer and inner radical overlap");
    if (out.reductive.dim() + out.unipotent.dim() != out.full.dim() || !(out.reductive.sum(out.unipotent) == out.full))
        fail("reductive ⊕ unipotent does not span the centralizer");
    if (!out.reductive.is_closed()) fail("reductive factor is not bracket-closed");
    if (!(out.unipotent == unipotent_radical(out.full))) fail("unipotent part differs from the unipotent radical");
    if (!out.unipotent.is_ideal_of(out.full)) fail("unipotent part is not an ideal of the centralizer");
    for (const auto& z : out.unipotent.basis())
        if (!is_nilpotent(z)) fail("unipotent part has a non-nilpotent element " + z.name());
    if (!is_reductive_factor(out.reductive, out.full)) fail("reductive part is not a reductive factor");
    Subalgebra b = algebras::borel(n);
    if (!(b.intersection(out.full) == b.intersection(out.reductive))) fail("b ∩ centralizer differs from b ∩ reductive factor");
    return out;
}

int borel_stabilizer_dimension(const OrbitDescriptor& d) {
    const int m = d.n - 2 * d.k;
    return (m - 1) * (m + 2) / 2 + d.k;
}

Subalgebra borel_form_stabilizer(const OrbitDescriptor& d) {
    Subalgebra b = algebras::borel(d.n);
    return form_stabilizer(LinearForm(representative_X(d), b), b);
}

bool b_orbit_open(const OrbitDescriptor& d) {
    Subalgebra b = algebras::borel(d.n);
    return static_cast<int>(b.dim() - borel_form_stabilizer(d).dim()) == orbit_dimension(d);
}

namespace {

Subalgebra lagrangian(int n, int k) {
    std::vector<LieElement> v;
    for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) v.push_back(LieElement::elementary(n, i, j));
    return Subalgebra::span(n, v);
}

}  // namespace

LagrangianReport lagrangian_check(const OrbitDescriptor& d) {
    LagrangianReport r;
    r.space = lagrangian(d.n, d.k);
    r.meets_centralizer_trivially = r.space.intersection(centralizer(representative_X(d))).dim() == 0;
    LinearForm f(representative_X(d));
    r.isotropic = true;
    for (const auto& u : r.space.basis())
        for (const auto& v : r.space.basis())
            if (sgn(f(bracket(u, v))) != 0) r.isotropic = false;
    r.half_dimension = 2 * static_cast<int>(r.space.dim()) == orbit_dimension(d);
    return r;
}

int orientation_sign(const OrbitDescriptor& d) {
    Subalgebra l = lagrangian(d.n, d.k);
    GroupElement w = w_squared(d.n, long_root(1, d.n));
    ExactMatrix action(l.dim(), l.dim());
    for (std::size_t c = 0; c < l.dim(); ++c) {
        LieElement image = w.conjugate(l.basis()[c]);
        if (!l.contains(image)) throw std::logic_error("w² does not preserve the Lagrangian");
        RationalVector coords = l.coordinates(image);
        for (std::size_t r = 0; r < l.dim(); ++r) action(r, c) = ExactScalar(coords[r]);
    }
    return det_sign_rational(action);
}

CharacterSet admissibility_set(int n, int k) {
    OrbitDescriptor::make(n, k);
    CharacterSet set;
    if (n % 2 == 0) {
        set.group_order = 2;
        set.values = {ExactScalar(1), ExactScalar(-1)};
        return set;
    }
    set.group_order = 4;
    set.filtered = true;
    ExactScalar value(1);
    for (int m = 0; m < 4; ++m, value *= ExactScalar::i())
        if (value * value == ExactScalar(-1)) set.values.push_back(value);
    return set;
}

}  // namespace sphorb
