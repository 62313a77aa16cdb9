#include "sphorb/fourier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sphorb {

namespace {

LieElement coordinate_vector(int n, const Var& v) { return LieElement::elementary(n, v.a, v.b + 1); }

ExactScalar two_i_pi() { return ExactScalar(2) * ExactScalar::i() * ExactScalar::pi(); }

Var same_named_target(const Var& v) { return Var::y(v.a, v.b); }

}  // namespace

std::vector<std::pair<Var, Var>> expected_dual_pairs(const RealizationSpec& spec) {
    const int n = spec.orbit.n, k = spec.orbit.k;
    std::vector<std::pair<Var, Var>> out;
    if (spec.tag == RealizationCase::Generic) {
        for (int i = 1; i <= k; ++i) out.push_back({Var::x(i, k), Var::y(k + 1, n - i)});
    } else {
        const int p = k;
        for (int i = 1; i <= p - 1; ++i) out.push_back({Var::x(p, n - i), Var::y(i, p - 1)});
    }
    return out;
}

FourierMap build_fourier(const OrbitDescriptor& d) { return build_fourier(realization_spec(d)); }

FourierMap build_fourier(const RealizationSpec& spec) {
    const int n = spec.orbit.n;
    FourierMap fm;
    fm.source = spec.source;
    fm.target = spec.target;
    fm.fixed = spec.extra;
    fm.pairing = ExactMatrix(fm.source.size(), fm.target.size());
    const LieElement x = representative_X(spec.orbit);
    for (std::size_t r = 0; r < fm.source.size(); ++r)
        for (std::size_t c = 0; c < fm.target.size(); ++c)
            fm.pairing(r, c) = ExactScalar(
                trace_form(x, bracket(coordinate_vector(n, fm.source[r]), coordinate_vector(n, fm.target[c]))));

    std::set<Var> hit;
    for (std::size_t r = 0; r < fm.source.size(); ++r) {
        std::vector<std::size_t> nz;
        for (std::size_t c = 0; c < fm.target.size(); ++c)
            if (!fm.pairing(r, c).is_zero()) nz.push_back(c);
        const Var& s = fm.source[r];
        if (nz.size() > 1) {
            fm.conflicts.push_back(s.name() + " pairs with several target variables");
            continue;
        }
        if (nz.size() == 1) {
            const Var& t = fm.target[nz[0]];
            fm.pairs.push_back({s, t, fm.pairing(r, nz[0])});
            if (!hit.insert(t).second) fm.conflicts.push_back(t.name() + " is paired twice");
            continue;
        }
        Var t = same_named_target(s);
        if (std::find(fm.target.begin(), fm.target.end(), t) == fm.target.end()) {
            fm.conflicts.push_back(s.name() + " is unpaired and has no same-named target");
            continue;
        }
        fm.shared.push_back(s);
        if (!hit.insert(t).second) fm.conflicts.push_back(t.name() + " is both paired and shared");
    }
    for (const auto& t : fm.target)
        if (!hit.count(t)) fm.conflicts.push_back(t.name() + " is not reached");

    std::set<std::pair<Var, Var>> found, expected;
    for (const auto& p : fm.pairs) found.insert({p.source, p.target});
    for (const auto& p : expected_dual_pairs(spec)) expected.insert(p);
    if (found != expected) fm.conflicts.push_back("dual pairs differ from the expected index pattern");
    if (spec.tag == RealizationCase::Generic)
        for (const auto& p : fm.pairs)
            if (!(p.pairing == ExactScalar(1)))
                fm.conflicts.push_back("pairing at " + p.source.name() + " is " + p.pairing.pretty() + ", not 1");
    return fm;
}

WeylOp FourierMap::image_of_coord(const Var& v) const {
    if (v.space == Var::Space::T || v.space == Var::Space::A) return WeylOp::coord(v);
    if (v.space != Var::Space::X) throw std::invalid_argument("Fourier transform applied to target variable " + v.name());
    for (const auto& p : pairs)
        if (p.source == v) return -(p.pairing * two_i_pi()).inverse() * WeylOp::deriv(p.target);
    if (std::find(shared.begin(), shared.end(), v) != shared.end()) return WeylOp::coord(same_named_target(v));
    throw std::invalid_argument("variable " + v.name() + " is outside the source space");
}

WeylOp FourierMap::image_of_deriv(const Var& v) const {
    if (v.space == Var::Space::T || v.space == Var::Space::A) return WeylOp::deriv(v);
    if (v.space != Var::Space::X) throw std::invalid_argument("Fourier transform applied to target variable " + v.name());
    for (const auto& p : pairs)
        if (p.source == v) return (p.pairing * two_i_pi()) * WeylOp::coord(p.target);
    if (std::find(shared.begin(), shared.end(), v) != shared.end()) return WeylOp::deriv(same_named_target(v));
    throw std::invalid_argument("variable " + v.name() + " is outside the source space");
}

WeylOp fourier_conjugate(const WeylOp& op, const FourierMap& fm) {
    WeylOp out;
    for (const auto& [m, c] : op.terms()) {
        WeylOp term(c);
        for (const auto& [v, e] : m.coords) {
            WeylOp img = fm.image_of_coord(v);
            for (int i = 0; i < e; ++i) term = term * img;
        }
        for (const auto& [v, e] : m.derivs) {
            WeylOp img = fm.image_of_deriv(v);
            for (int i = 0; i < e; ++i) term = term * img;
        }
        for (const auto& a : m.atoms) term = term * WeylOp::atom(a);
        out += term;
    }
    return out;
}

}  // namespace sphorb
