// Acceptance criteria 1–13, one PASS/FAIL line each. Exact comparisons only.
// Usage: acceptance <golden-dir> [criterion...]

#include "report.hpp"
#include "sphorb/fourier.hpp"
#include "sphorb/parab.hpp"
#include "sphorb/realization.hpp"
#include "sphorb/series.hpp"
#include "sphorb/stab.hpp"
#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace sphorb;
using namespace testsupport;

namespace {

using Outcome = std::optional<std::string>;  // failure message, or nothing on pass

std::string golden_dir;

std::vector<OrbitDescriptor> catalog_range(int lo, int hi) {
    std::vector<OrbitDescriptor> out;
    for (int n = lo; n <= hi; ++n)
        for (const auto& d : catalog(n)) out.push_back(d);
    return out;
}

ExactScalar two_i_pi() { return ExactScalar(2) * ExactScalar::i() * ExactScalar::pi(); }

Outcome orbit_dimensions() {
    for (const auto& d : catalog_range(4, 12)) {
        const int n = d.n;
        int computed = n * n - 1 - static_cast<int>(centralizer(representative_X(d)).dim());
        if (computed != 2 * d.k * (n - d.k) || orbit_dimension(d) != computed) return d.key() + ": dim " + std::to_string(computed);
    }
    return {};
}

Outcome borel_stabilizers() {
    for (const auto& d : catalog_range(4, 12)) {
        const int n = d.n, m = n - 2 * d.k;
        int formula = (m - 1) * (m + 2) / 2 + d.k;
        int dim_b = n * (n + 1) / 2 - 1;
        int computed = static_cast<int>(borel_form_stabilizer(d).dim());
        if (computed != formula || borel_stabilizer_dimension(d) != formula)
            return d.key() + ": dim b(X) " + std::to_string(computed) + " vs " + std::to_string(formula);
        if (dim_b - computed != 2 * d.k * (n - d.k) || !b_orbit_open(d)) return d.key() + ": B-orbit not open";
    }
    return {};
}

Outcome stabilizer_decompositions() {
    for (const auto& d : catalog_range(4, 10)) {
        StabilizerDecomposition s = verify_stabilizer_decomposition(d);
        if (!s.ok()) return d.key() + ": " + s.failures.front();
        if (!(s.full == centralizer(representative_X(d)))) return d.key() + ": pieces do not span the centralizer";
        if (s.reductive.dim() + s.unipotent.dim() != s.full.dim()) return d.key() + ": sum is not direct";
    }
    return {};
}

Outcome orientation_signs() {
    for (const auto& d : catalog_range(4, 10)) {
        if (orientation_sign(d) != (d.n % 2 == 0 ? 1 : -1)) return d.key() + ": orientation sign";
        std::vector<ExactScalar> v = admissibility_set(d.n, d.k).values;
        std::vector<ExactScalar> want = d.n % 2 == 0 ? std::vector<ExactScalar>{ExactScalar(1), ExactScalar(-1)}
                                                     : std::vector<ExactScalar>{ExactScalar::i(), -ExactScalar::i()};
        // order-free comparison; the square of every value is ±1 by construction
        if (v.size() != 2 || !(std::set<std::string>{v[0].pretty(), v[1].pretty()} ==
                               std::set<std::string>{want[0].pretty(), want[1].pretty()}))
            return d.key() + ": admissibility set";
    }
    return {};
}

Outcome parabolic_sweep() {
    std::string first;
    int witness_bad = 0, lemma_bad = 0, lemma_total = 0;
    for (const auto& d : catalog_range(4, 8)) {
        for (int i = 1; i < d.n; ++i) {
            WitnessReport w = verify_witness(d, i);
            if (!w.ok()) {
                ++witness_bad;
                if (first.empty()) first = d.key() + " i=" + std::to_string(i) + ": " + w.failures().front();
            }
        }
        for (const auto& r : amalgamation_check(d)) {
            ++lemma_total;
            if (!r.ok()) {
                ++lemma_bad;
                if (first.empty())
                    first = d.key() + " (i,j)=(" + std::to_string(r.i) + "," + std::to_string(r.j) + "): " + r.failures.front();
            }
        }
    }
    if (witness_bad + lemma_bad == 0) return {};
    return std::to_string(witness_bad) + " parabolic witnesses and " + std::to_string(lemma_bad) + "/" +
           std::to_string(lemma_total) + " amalgamation cases fail; first " + first;
}

Outcome classification_table() {
    for (const auto& d : catalog_range(4, 12)) {
        DufloParameters t = duflo_classification(d);
        if (t.entries.size() != static_cast<std::size_t>(d.n - 1)) return d.key() + ": row count";
        for (const auto& e : t.entries) {
            bool inside = d.k <= e.i && e.i <= d.n - d.k;
            const DufloEntry& m = t.entries[static_cast<std::size_t>(d.n - e.i - 1)];
            if (e.unipotent_type != inside || (e.branch == DufloBranch::Unipotent) != inside)
                return d.key() + ": branch at i=" + std::to_string(e.i);
            if (m.branch != e.branch || m.mirror != e.i || m.chain.dim() != e.chain.dim())
                return d.key() + ": mirror symmetry at i=" + std::to_string(e.i);
            // the induced branch carries a nonzero reductive parameter, the unipotent branch none
            if (inside != e.lambda.vanishes_on(e.chain)) return d.key() + ": reductive parameter at i=" + std::to_string(e.i);
        }
    }
    std::ifstream in(golden_dir + "/cor4.3.txt");
    if (!in) return "golden file missing in " + golden_dir;
    std::stringstream golden;
    golden << in.rdbuf();
    cli::Options opt;
    opt.n_lo = 4;
    opt.n_hi = 12;
    if (cli::render_table("cor4.3", opt, false) != golden.str()) return "rendered table differs from the golden file";
    return {};
}

WeylOp random_op(const std::vector<Var>& vars, const std::vector<Atom>& atoms) {
    WeylOp out;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        for (const auto& v : vars) {
            if (uniform(0, 1)) m.coords[v] = static_cast<int>(uniform(1, 2));
            if (uniform(0, 1)) m.derivs[v] = static_cast<int>(uniform(1, 2));
        }
        if (uniform(0, 2) == 0) m.atoms.push_back(atoms[static_cast<std::size_t>(uniform(0, 1))]);
        out += WeylOp::monomial(ExactScalar(random_rational(4)), m);
    }
    return out;
}

Outcome fourier_laws() {
    std::vector<FourierMap> maps;
    for (const auto& d : catalog_range(4, 10)) {
        FourierMap fm = build_fourier(d);
        if (!fm.ok()) return d.key() + ": " + fm.conflicts.front();
        auto c = [&](const Var& v) { return WeylOp::coord(v); };
        auto dd = [&](const Var& v) { return WeylOp::deriv(v); };
        if (d.realization_case() == RealizationCase::Generic) {
            const int n = d.n, k = d.k;
            for (int i = 1; i <= k; ++i) {
                Var xi = Var::x(i, k), yi = Var::y(k + 1, n - i);
                if (fourier_conjugate(dd(xi), fm) != two_i_pi() * c(yi)) return d.key() + ": derivative rule";
                if (two_i_pi() * fourier_conjugate(c(xi), fm) != -dd(yi)) return d.key() + ": coordinate rule";
                if (fourier_conjugate(c(xi) * dd(xi), fm) != WeylOp(ExactScalar(-1)) - c(yi) * dd(yi))
                    return d.key() + ": Euler rule at i=" + std::to_string(i);
                for (int j = 1; j <= k; ++j) {
                    if (j == i) continue;
                    Var xj = Var::x(j, k), yj = Var::y(k + 1, n - j);
                    if (fourier_conjugate(c(xj) * dd(xi), fm) != -(c(yi) * dd(yj)))
                        return d.key() + ": mixed rule at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        }
        maps.push_back(std::move(fm));
    }
    std::vector<Atom> atoms{Atom::scalar("b[1,2]"), Atom::derivation("d[X(alpha_1)]")};
    for (int trial = 0; trial < 200; ++trial) {
        const FourierMap& fm = maps[static_cast<std::size_t>(uniform(0, static_cast<long>(maps.size()) - 1))];
        std::vector<Var> vars;
        for (int i = 0; i < 3; ++i) vars.push_back(fm.source[static_cast<std::size_t>(uniform(0, static_cast<long>(fm.source.size()) - 1))]);
        for (const auto& v : fm.fixed) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        WeylOp a = random_op(vars, atoms), b = random_op(vars, atoms);
        if (fourier_conjugate(a * b, fm) != fourier_conjugate(a, fm) * fourier_conjugate(b, fm))
            return "not multiplicative on " + a.str() + " and " + b.str();
    }
    return {};
}

Outcome generic_realization() {
    std::string first;
    int bad = 0, total = 0;
    for (const auto& d : catalog_range(4, 10)) {
        if (d.realization_case() != RealizationCase::Generic) continue;
        RealizationSpec s = realization_spec(d);
        for (const auto& z : printed_psi_generators(s)) {
            ++total;
            if (!verify_matching(z, s).ok()) {
                ++bad;
                if (first.empty()) first = d.key() + " matching " + z.label();
            }
        }
        BracketReport br = verify_bracket_relations(s);
        for (const auto& c : br.cases) {
            ++total;
            // independent structure constants: [H_j, X_β] = ⟨β, α_j^∨⟩X_β, [H_j, H_l] = 0
            WeylOp expect;
            if (c.right.kind == Generator::Kind::RootVector)
                expect = ExactScalar(cartan_integer(c.right.root, c.left.index)) * phi_generator(c.right, s);
            if (c.commutator != expect) {
                ++bad;
                if (first.empty()) first = d.key() + " [" + c.left.label() + ", " + c.right.label() + "]";
            }
        }
    }
    if (!bad) return {};
    return std::to_string(bad) + "/" + std::to_string(total) + " checks fail; first " + first;
}

Outcome even_maximal_realization() {
    for (int p = 2; 2 * p <= 10; ++p)
        for (int eps : {1, -1}) {
            OrbitDescriptor d = OrbitDescriptor::make(2 * p, p, eps);
            RealizationSpec s = realization_spec(d);
            MatchReport m = verify_matching(Generator::coroot(p), s);
            if (!m.ok()) return d.key() + ": matching differs by " + m.difference.str();
            WeylOp h = phi_generator(Generator::coroot(p), s);
            WeylOp x = phi_generator(Generator::root_vector(simple_root(p)), s);
            if (weyl_commutator(h, x) != ExactScalar(2) * x) return d.key() + ": [H, X] != 2X";
        }
    return {};
}

Outcome gk_dimensions() {
    std::set<RealizationCase> seen;
    for (const auto& d : catalog_range(4, 12)) {
        GkAudit a = gk_dimension_audit(d);
        RealizationSpec s = realization_spec(d);
        std::size_t count = s.reductive_dim() + s.extra.size() + s.target.size();
        if (!a.ok() || 2 * count != static_cast<std::size_t>(2 * d.k * (d.n - d.k)) || a.variety_dim != count)
            return d.key() + ": 2 dim variety = " + std::to_string(2 * count);
        seen.insert(d.realization_case());
    }
    if (seen.size() != 3) return "not every realization case was exercised";
    return {};
}

Outcome discrete_series() {
    WeylOp t = WeylOp::coord(Var::t()), dt = WeylOp::deriv(Var::t());
    WeylOp h = t * dt + WeylOp(ExactScalar::fraction(1, 2));
    for (int eps : {1, -1}) {
        WeylOp x = ExactScalar(-eps) * ExactScalar::i() * ExactScalar::pi() * t * t;
        if (h * x - x * h != ExactScalar(2) * x) return "eps=" + std::to_string(eps);
        if (!sl2_series_check(eps)) return "library check fails for eps=" + std::to_string(eps);
    }
    return {};
}

Outcome series_identities() {
    const int r_max = 12;
    SeriesCoefficients s = series_coefficients(r_max);
    // Bernoulli numbers from Σ_{j<m+1} C(m+1, j) B_j = 0, so c_r = B_r / r!
    std::vector<Rational> bern(r_max + 1);
    bern[0] = 1;
    for (int m = 1; m <= r_max; ++m) {
        Rational acc = 0, binom = 1;
        for (int j = 0; j < m; ++j) {
            acc += binom * bern[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        bern[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    Rational fact = 1;
    for (int r = 0; r <= r_max; ++r) {
        if (r) fact *= r;
        const Rational& b = s.b[static_cast<std::size_t>(r)];
        const Rational& c = s.c[static_cast<std::size_t>(r)];
        if (c != bern[static_cast<std::size_t>(r)] / fact) return "c_" + std::to_string(r) + " = " + c.get_str();
        if (r >= 2 && b != c) return "b_" + std::to_string(r) + " != c_" + std::to_string(r);
        if (r >= 3 && r % 2 == 1 && b != 0) return "b_" + std::to_string(r) + " = " + b.get_str();
    }
    if (s.b[0] != 1 || s.c[0] != 1 || s.b[1] != frac(1, 2) || s.c[1] != frac(-1, 2)) return "leading coefficients";
    return {};
}

Outcome epsilon_invariance() {
    for (int n : {4, 6, 8, 10}) {
        std::map<int, int> value;
        for (int eps : {1, -1}) {
            LieElement x = representative_X(OrbitDescriptor::make(n, n / 2, eps));
            int e = epsilon_invariant(x);
            for (int trial = 0; trial < 100; ++trial)
                if (epsilon_invariant(random_unimodular(n).conjugate(x)) != e)
                    return "n=" + std::to_string(n) + " eps=" + std::to_string(eps) + " changes under conjugation";
            value[eps] = e;
        }
        if (value[1] == value[-1]) return "n=" + std::to_string(n) + ": both signs give the same invariant";
    }
    return {};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <golden-dir> [criterion...]\n";
        return 2;
    }
    golden_dir = argv[1];
    std::set<int> only;
    for (int a = 2; a < argc; ++a) only.insert(std::stoi(argv[a]));

    const std::vector<Criterion> criteria{
        {1, "orbit dimensions 2k(n-k), n <= 12", orbit_dimensions},
        {2, "Borel stabilizer formula and open B-orbit, n <= 12", borel_stabilizers},
        {3, "stabilizer decompositions span the centralizer, n <= 10", stabilizer_decompositions},
        {4, "orientation signs and admissibility sets, n <= 10", orientation_signs},
        {5, "parabolic predicates and amalgamation sweep, n <= 8", parabolic_sweep},
        {6, "classification table and golden file, n <= 12", classification_table},
        {7, "Fourier rules and homomorphism, n <= 10", fourier_laws},
        {8, "generic realization matching and brackets, n <= 10", generic_realization},
        {9, "even maximal realization, n <= 10", even_maximal_realization},
        {10, "Gelfand-Kirillov dimension count, n <= 12", gk_dimensions},
        {11, "discrete series bracket, both signs", discrete_series},
        {12, "series coefficients up to 12", series_identities},
        {13, "epsilon invariant under unimodular conjugation", epsilon_invariance},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = std::string("exception: ") + e.what();
        }
        std::cout << (out ? "FAIL" : "PASS") << "  " << c.id << "  " << c.title;
        if (out) std::cout << "  (" << *out << ")";
        std::cout << std::endl;
        failed += out ? 1 : 0;
    }
    return failed ? 1 : 0;
}
