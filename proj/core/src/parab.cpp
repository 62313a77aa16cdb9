#include "sphorb/parab.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sphorb {

namespace {

Subalgebra span_of(int n, std::vector<LieElement> v) { return Subalgebra::span(n, v); }

/// m_i ⊕ a_i.
Subalgebra levi(const ParabolicData& p) { return p.m.sum(p.a); }

void check_index(const OrbitDescriptor& d, int i) {
    if (i < 1 || i > d.n - 1) throw std::out_of_range("parabolic index outside 1..n-1");
}

}  // namespace

namespace {

ParabolicData construct_parabolic(int i, int n) {
    ParabolicData out;
    out.n = n;
    out.i = i;
    out.m = Subalgebra(n);
    if (i >= 2) out.m = out.m.sum(algebras::sl_block(n, 1, i));
    if (n - i >= 2) out.m = out.m.sum(algebras::sl_block(n, i + 1, n - i));
    out.a = span_of(n, {LieElement::coroot(n, i)});
    std::vector<LieElement> nil, all;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            bool same_block = (a <= i) == (b <= i);
            if (a <= i && b > i) nil.push_back(LieElement::elementary(n, a, b));
            if (same_block || (a <= i && b > i)) all.push_back(LieElement::elementary(n, a, b));
        }
    for (int h = 1; h < n; ++h) all.push_back(LieElement::coroot(n, h));
    out.nil = span_of(n, nil);
    out.p = span_of(n, all);

    if (out.m.dim() + out.a.dim() + out.nil.dim() != out.p.dim() || !(out.m.sum(out.a).sum(out.nil) == out.p))
        throw std::logic_error("parabolic pieces do not form a direct sum");
    if (!out.nil.is_abelian()) throw std::logic_error("parabolic nilradical is not abelian");
    if (!out.nil.is_ideal_of(out.p)) throw std::logic_error("parabolic nilradical is not an ideal");
    return out;
}

}  // namespace

// Pure in (i, n) and rebuilt by almost every query below, so results are memoized.
ParabolicData build_parabolic(int i, int n) {
    if (n < 2 || i < 1 || i > n - 1) throw std::out_of_range("build_parabolic: need 1 <= i <= n-1");
    static std::mutex lock;
    static std::map<std::pair<int, int>, ParabolicData> cache;
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find({i, n});
        if (it != cache.end()) return it->second;
    }
    ParabolicData out = construct_parabolic(i, n);
    std::lock_guard<std::mutex> g(lock);
    return cache.emplace(std::make_pair(i, n), std::move(out)).first->second;
}

RestrictedForms restricted_forms(const OrbitDescriptor& d, int i) {
    check_index(d, i);
    ParabolicData p = build_parabolic(i, d.n);
    LieElement x = representative_X(d);
    // lower-left block of X pairs only with the upper-right block under the trace
    LieElement lower(d.n);
    for (int a = i + 1; a <= d.n; ++a)
        for (int b = 1; b <= i; ++b)
            if (sgn(x.at(a, b)) != 0) lower += x.at(a, b) * LieElement::elementary(d.n, a, b);
    return RestrictedForms{LinearForm(x, p.p), LinearForm(x, p.nil), LinearForm(lower, p.p),
                           LinearForm(x, chain_algebra(d, i))};
}

Subalgebra chain_algebra(const OrbitDescriptor& d, int i) {
    check_index(d, i);
    const int n = d.n, k = d.k;
    if (i < k) return middle_block(n, i);
    if (i > n - k) return middle_block(n, n - i);
    return middle_block(n, k).intersection(levi(build_parabolic(i, n)));
}

Subalgebra twisted_complement(const OrbitDescriptor& d, int i) {
    check_index(d, i);
    const int n = d.n, k = d.k;
    if (i < k) return twisted_diagonal(n, i, 1);
    if (i > n - k) return twisted_diagonal(n, n - i, 1);
    return twisted_diagonal(n, k, d.eps).intersection(levi(build_parabolic(i, n)));
}

Subalgebra reductive_candidate(const OrbitDescriptor& d, int i) {
    return chain_algebra(d, i).sum(twisted_complement(d, i));
}

Subalgebra witness_algebra(const OrbitDescriptor& d, int i) {
    check_index(d, i);
    ParabolicData p = build_parabolic(i, d.n);
    return orthogonal(p.nil, LinearForm(representative_X(d)), p.p);
}

Subalgebra parabolic_stabilizer(const OrbitDescriptor& d, int i) {
    check_index(d, i);
    return centralizer_in(representative_X(d), build_parabolic(i, d.n).p);
}

bool coisotropic(const Subalgebra& sub, const LinearForm& q, const Subalgebra& ambient) {
    if (!ambient.contains(sub)) return false;
    return sub.contains(orthogonal(sub, q, ambient));
}

bool strongly_unipotent(const Subalgebra& sub, const LinearForm& q, const Subalgebra& ambient) {
    if (!sub.is_closed() || !coisotropic(sub, q, ambient)) return false;
    Subalgebra stab = form_stabilizer(q, ambient);
    return sub == stab.sum(unipotent_radical(sub));
}

bool unipotent_type(const LinearForm& q, const Subalgebra& ambient, const Subalgebra& witness,
                    const std::optional<Subalgebra>& reductive) {
    Subalgebra stab = form_stabilizer(q, ambient);
    bool factor_in_kernel = reductive ? is_reductive_factor(*reductive, stab) && q.vanishes_on(*reductive)
                                      : q.vanishes_on(stab);
    return factor_in_kernel && ambient.contains(witness) && strongly_unipotent(witness, q, ambient);
}

std::string to_string(DufloBranch b) { return b == DufloBranch::Induced ? "induced" : "unipotent"; }

DufloParameters duflo_classification(const OrbitDescriptor& d) {
    DufloParameters out;
    out.orbit = d;
    for (int i = 1; i <= d.n - 1; ++i) {
        RestrictedForms forms = restricted_forms(d, i);
        DufloEntry e;
        e.i = i;
        e.mirror = d.n - i;
        e.chain = chain_algebra(d, i);
        bool unipotent = d.k <= i && i <= d.n - d.k;
        e.branch = unipotent ? DufloBranch::Unipotent : DufloBranch::Induced;
        e.unipotent_type = unipotent;
        e.form = unipotent ? forms.on_parabolic : forms.extension;
        e.lambda = unipotent ? LinearForm(LieElement(d.n), e.chain) : forms.reductive;
        out.entries.push_back(std::move(e));
    }
    return out;
}

bool WitnessReport::ok() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

std::vector<std::string> WitnessReport::failures() const {
    std::vector<std::string> out;
    for (const auto& [name, pass] : checks)
        if (!pass) out.push_back(name);
    return out;
}

WitnessReport verify_witness(const OrbitDescriptor& d, int i) {
    check_index(d, i);
    WitnessReport r;
    r.i = i;
    ParabolicData p = build_parabolic(i, d.n);
    RestrictedForms forms = restricted_forms(d, i);
    Subalgebra b = witness_algebra(d, i);
    Subalgebra rp = reductive_candidate(d, i);
    Subalgebra chain = chain_algebra(d, i);
    Subalgebra twisted = twisted_complement(d, i);
    Subalgebra stab_x = parabolic_stabilizer(d, i);
    Subalgebra stab_g = form_stabilizer(forms.extension, p.p);
    bool unipotent = d.k <= i && i <= d.n - d.k;

    r.checks["extension form vanishes on the Levi factor"] = forms.extension.vanishes_on(levi(p));
    r.checks["extension form agrees on the nilradical"] = [&] {
        for (const auto& z : p.nil.basis())
            if (forms.extension(z) != forms.on_nilradical(z)) return false;
        return true;
    }();
    r.checks["chain and twisted pieces are independent"] = chain.independent_of(twisted);
    r.checks["reductive candidate lies in the Levi factor"] = levi(p).contains(rp);
    r.checks["witness splits as reductive + stabilizer radical + nilradical"] =
        b == rp.sum(unipotent_radical(stab_x)).sum(p.nil);
    r.checks["reductive candidate is a reductive factor of the witness"] = is_reductive_factor(rp, b);
    r.checks["reductive candidate stabilizes the extension form"] = stab_g.contains(rp);
    r.checks["witness is coisotropic"] = coisotropic(b, forms.extension, p.p);
    r.checks["witness is strongly unipotent"] = strongly_unipotent(b, forms.extension, p.p);
    r.checks["extension form is of unipotent type"] = unipotent_type(forms.extension, p.p, b, rp);
    r.checks["reductive form vanishes on the twisted piece"] = LinearForm(representative_X(d)).vanishes_on(twisted);
    r.checks["parabolic orbit has full dimension"] =
        static_cast<int>(p.p.dim() - stab_x.dim()) == orbit_dimension(d);
    if (unipotent) {
        r.checks["reductive form is zero"] = forms.reductive.vanishes_on(chain);
        r.checks["restricted form is of unipotent type"] =
            unipotent_type(forms.on_parabolic, p.p, b, rp);
    } else {
        r.checks["reductive form is nonzero"] = !forms.reductive.vanishes_on(chain);
    }
    return r;
}

ChainReport recursion_chain(const OrbitDescriptor& d) {
    ChainReport r;
    const int n = d.n, k = d.k;
    Subalgebra h = algebras::cartan(n);
    for (int i = 1; i <= k; ++i) {
        r.algebras.push_back(chain_algebra(d, i));
        r.ranks.push_back(static_cast<int>(r.algebras.back().intersection(h).dim()));
        int size = i < k ? n - 2 * i : n - 2 * k;
        r.expected_ranks.push_back(size >= 2 ? size - 1 : 0);
    }
    for (int i = 1; i < k; ++i)
        if (!r.algebras[i - 1].contains(r.algebras[i]))
            r.failures.push_back("g_" + std::to_string(i + 1) + " is not inside g_" + std::to_string(i));
    for (int i = 1; i <= k; ++i)
        if (r.ranks[i - 1] != r.expected_ranks[i - 1])
            r.failures.push_back("rank of g_" + std::to_string(i) + " is " + std::to_string(r.ranks[i - 1]) +
                                 ", expected " + std::to_string(r.expected_ranks[i - 1]));
    const int p = n / 2;
    if (k == p) {
        if (r.ranks[p - 1] != 0) r.failures.push_back("top of the chain is not zero");
        if (p >= 2) {
            Subalgebra expect = algebras::sl_block(n, p, n % 2 == 0 ? 2 : 3);
            if (!(r.algebras[p - 2] == expect)) r.failures.push_back("second-to-last chain algebra is not the expected sl block");
        }
    } else {
        for (int i = 1; i < k; ++i)
            if (r.ranks[i - 1] < 3) r.failures.push_back("rank below 3 at g_" + std::to_string(i));
    }
    return r;
}

bool GeneratorCoverage::ok() const {
    if (static_cast<int>(index_for_root.size()) != n - 1) return false;
    return generated_dimension == static_cast<std::size_t>(n * n - 1);
}

GeneratorCoverage generator_coverage(int n) {
    if (n < 3) throw std::out_of_range("generator_coverage: need n >= 3");
    GeneratorCoverage out;
    out.n = n;
    std::vector<ParabolicData> parabolics;
    for (int i = 1; i < n; ++i) parabolics.push_back(build_parabolic(i, n));
    for (int s = 1; s < n; ++s) {
        LieElement x = LieElement::root_vector(n, simple_root(s).negative());
        for (const auto& p : parabolics)
            if (p.p.contains(x)) {
                out.index_for_root[s] = p.i;
                break;
            }
    }
    out.generated_dimension = Subalgebra::closure(n, algebras::chevalley_generators(n)).dim();
    return out;
}

std::vector<AmalgamationReport> amalgamation_check(const OrbitDescriptor& d) {
    std::vector<AmalgamationReport> out;
    const int n = d.n, k = d.k;
    LinearForm f(representative_X(d));
    for (int i = 1; i < k; ++i) {
        Subalgebra gi = chain_algebra(d, i);
        for (int j = i + 1; j <= n - i - 1; ++j) {
            AmalgamationReport r;
            r.i = i;
            r.j = j;
            ParabolicData pj = build_parabolic(j, n);
            Subalgebra gj = chain_algebra(d, j);
            Subalgebra pij = gi.intersection(pj.p);
            Subalgebra nij = gi.intersection(pj.nil);
            Subalgebra c = gj.sum(nij);
            if (!gi.contains(gj)) r.failures.push_back("g_j is not inside g_i");
            if (!gj.independent_of(nij)) r.failures.push_back("g_j meets the nilradical");
            if (!(unipotent_radical(pij) == nij)) r.failures.push_back("nilradical of the parabolic differs");
            if (!pij.contains(c)) r.failures.push_back("c is not inside the parabolic of g_i");
            if (!c.is_closed()) r.failures.push_back("c is not bracket-closed");
            Subalgebra stab = form_stabilizer(f, pij);
            Subalgebra nil_stab = orthogonal(nij, f, pij);
            r.parabolic_dim = pij.dim();
            r.stabilizer_dim = stab.dim();
            r.c_dim = c.dim();
            r.nil_stabilizer_dim = nil_stab.dim();
            r.nil_stabilizer_strongly_unipotent = strongly_unipotent(nil_stab, f, pij);
            if (2 * c.dim() < pij.dim() + stab.dim()) r.failures.push_back("c is too small to be coisotropic");
            if (!stab.sum(unipotent_radical(c)).contains(c) || !c.contains(stab))
                r.failures.push_back("c differs from stabilizer + unipotent radical of c");
            if (!strongly_unipotent(c, f.restricted(pij), pij)) r.failures.push_back("c is not strongly unipotent");
            out.push_back(std::move(r));
        }
    }
    return out;
}

ParameterToken ParameterToken::character(ExactScalar v) {
    ParameterToken t;
    t.kind = Kind::Character;
    t.value = std::move(v);
    return t;
}

ParameterToken ParameterToken::discrete_series(ExactScalar character_value, int sign, int m) {
    ParameterToken t;
    t.kind = Kind::DiscreteSeries;
    t.value = std::move(character_value);
    t.sign = sign;
    t.twice = m;
    return t;
}

ParameterToken ParameterToken::opaque(std::string label, ExactScalar character_value) {
    ParameterToken t;
    t.kind = Kind::Opaque;
    t.label = std::move(label);
    t.value = std::move(character_value);
    return t;
}

std::string ParameterToken::str() const {
    switch (kind) {
        case Kind::Character: return "chi(" + value.pretty() + ")";
        case Kind::DiscreteSeries:
            return "chi(" + value.pretty() + ")⊗ds(" + std::string(sign < 0 ? "-" : "") + std::to_string(twice) + "/2)";
        case Kind::Opaque: return "chi(" + value.pretty() + ")⊗" + label;
    }
    return "?";
}

std::vector<int> discrete_series_indices(int eps_prime, int bound) {
    std::vector<int> out;
    const int residue = 1 - eps_prime;
    for (int m = -bound; m <= bound; ++m)
        if (m != 0 && ((m - residue) % 4 + 4) % 4 == 0) out.push_back(m);
    return out;
}

FamilyCheck parameter_family_check(const ParameterFamily& fam, const OrbitDescriptor& d) {
    const int n = d.n, k = d.k;
    auto fail = [](int a, int b, std::string why) { return FamilyCheck{false, std::make_pair(a, b), std::move(why)}; };
    if (static_cast<int>(fam.tokens.size()) != n - 1) return fail(0, 0, "family must have n-1 entries");
    for (int i = 1; i < k; ++i)
        if (!(fam.at(n - i) == fam.at(i))) return fail(i, n - i, "mirror entries differ");
    for (int i = k; i <= n - k; ++i)
        for (int j = i + 1; j <= n - k; ++j)
            if (!(fam.at(i) == fam.at(j))) return fail(i, j, "middle block entries differ");

    const int p = n / 2;
    if (k != p) return {};
    if (n % 2 == 0) {
        const ParameterToken& top = fam.at(p);
        bool plus = top.value == ExactScalar(1), minus = top.value == ExactScalar(-1);
        if (top.kind != ParameterToken::Kind::Character || !(plus || minus))
            return fail(p, p, "top entry must be a character with value ±1 at w²");
        const int eps_prime = plus ? 1 : -1;
        const ParameterToken& below = fam.at(p - 1);
        if (below.kind != ParameterToken::Kind::DiscreteSeries || !(below.value == top.value))
            return fail(p - 1, p, "entry below the top must be a discrete series over the same character");
        if (below.sign != d.eps) return fail(p - 1, p, "discrete series sign differs from the orbit sign");
        if (below.twice == 0 || ((below.twice - (1 - eps_prime)) % 4 + 4) % 4 != 0)
            return fail(p - 1, p, "discrete series index violates the congruence");
        return {};
    }
    ExactScalar minus_i = -ExactScalar::i();
    if (!(fam.at(p) == ParameterToken::character(minus_i))) return fail(p, p, "top entry must be the character with value -i");
    if (!(fam.at(p - 1) == ParameterToken::opaque("rho(-i)", minus_i)))
        return fail(p - 1, p, "entry below the top must be chi(-i)⊗rho(-i)");
    return {};
}

}  // namespace sphorb
