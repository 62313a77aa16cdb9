#include <doctest.h>

#include "sphorb/fourier.hpp"
#include "weyl_support.hpp"

#include <set>
#include <stdexcept>

using namespace sphorb;
using namespace testsupport;

namespace {

ExactScalar two_i_pi() { return ExactScalar(2) * ExactScalar::i() * ExactScalar::pi(); }

/// tr(X (AB − BA)) with plain matrix products, A = E_{a,b+1} for the source and B for the target coordinate.
Rational pairing_oracle(const OrbitDescriptor& d, const Var& s, const Var& t) {
    const int n = d.n;
    RationalMatrix a(n, n), b(n, n);
    a(s.a - 1, s.b) = 1;
    b(t.a - 1, t.b) = 1;
    RationalMatrix ab = a * b, ba = b * a;
    RationalMatrix x = representative_X(d).matrix();
    Rational tr;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) tr += x(r, c) * (ab(c, r) - ba(c, r));
    return tr;
}

WeylOp xc(const Var& v) { return WeylOp::coord(v); }
WeylOp xd(const Var& v) { return WeylOp::deriv(v); }

std::vector<OrbitDescriptor> catalog_upto(int hi) {
    std::vector<OrbitDescriptor> out;
    for (int n = 4; n <= hi; ++n)
        for (const auto& d : catalog(n)) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("dual pairs for n=6, k=2") {
    FourierMap fm = build_fourier(OrbitDescriptor::make(6, 2));
    CHECK(fm.ok());
    std::set<std::pair<Var, Var>> got;
    for (const auto& p : fm.pairs) got.insert({p.source, p.target});
    CHECK(got == std::set<std::pair<Var, Var>>{{Var::x(1, 2), Var::y(3, 5)}, {Var::x(2, 2), Var::y(3, 4)}});
    for (const auto& p : fm.pairs) CHECK(p.pairing == ExactScalar(1));
    CHECK(fm.shared == std::vector<Var>{Var::x(4, 4), Var::x(4, 5)});
}

TEST_CASE("pairing matrix agrees with the matrix oracle") {
    for (const auto& d : catalog_upto(10)) {
        FourierMap fm = build_fourier(d);
        INFO(d.key());
        CHECK(fm.ok());
        for (std::size_t r = 0; r < fm.source.size(); ++r)
            for (std::size_t c = 0; c < fm.target.size(); ++c)
                CHECK(fm.pairing(r, c) == ExactScalar(pairing_oracle(d, fm.source[r], fm.target[c])));
        std::size_t nonzero = 0;
        for (std::size_t r = 0; r < fm.source.size(); ++r)
            for (std::size_t c = 0; c < fm.target.size(); ++c) nonzero += fm.pairing(r, c).is_zero() ? 0 : 1;
        if (d.realization_case() == RealizationCase::Generic) {
            CHECK(nonzero == static_cast<std::size_t>(d.k));
            // Q_k(X, Y) = Σ x_{ik} y_{k+1,n−i}
            for (int i = 1; i <= d.k; ++i) CHECK(pairing_oracle(d, Var::x(i, d.k), Var::y(d.k + 1, d.n - i)) == 1);
        } else {
            CHECK(nonzero == static_cast<std::size_t>(d.k - 1));
        }
        CHECK(fm.pairs.size() + fm.shared.size() == fm.source.size());
        CHECK(fm.source.size() == fm.target.size());
    }
    for (int n = 11; n <= 12; ++n)
        for (const auto& d : catalog(n)) CHECK(build_fourier(d).ok());
}

TEST_CASE("variable rules") {
    FourierMap fm = build_fourier(OrbitDescriptor::make(6, 2));
    CHECK(fourier_conjugate(xd(Var::x(1, 2)), fm) == two_i_pi() * xc(Var::y(3, 5)));
    CHECK(two_i_pi() * fourier_conjugate(xc(Var::x(1, 2)), fm) == -xd(Var::y(3, 5)));
    CHECK(fourier_conjugate(WeylOp(ExactScalar(1)), fm) == WeylOp(ExactScalar(1)));
    CHECK(fourier_conjugate(xc(Var::x(4, 5)), fm) == xc(Var::y(4, 5)));
    CHECK(fourier_conjugate(WeylOp::atom(Atom::scalar("b[1,2]")), fm) == WeylOp::atom(Atom::scalar("b[1,2]")));
    CHECK_THROWS_AS(fourier_conjugate(xc(Var::y(3, 5)), fm), std::invalid_argument);
    CHECK_THROWS_AS(fourier_conjugate(xc(Var::x(1, 1)), fm), std::invalid_argument);
}

TEST_CASE("derived rules follow from the variable rules") {
    for (int n = 4; n <= 10; ++n)
        for (const auto& d : catalog(n)) {
            FourierMap fm = build_fourier(d);
            INFO(d.key());
            const int k = d.k;
            if (d.realization_case() == RealizationCase::Generic) {
                for (int i = 1; i <= k; ++i) {
                    Var xi = Var::x(i, k), yi = Var::y(k + 1, n - i);
                    CHECK(fourier_conjugate(xd(xi), fm) == two_i_pi() * xc(yi));
                    CHECK(two_i_pi() * fourier_conjugate(xc(xi), fm) == -xd(yi));
                    CHECK(fourier_conjugate(xc(xi) * xd(xi), fm) == WeylOp(ExactScalar(-1)) - xc(yi) * xd(yi));
                    for (int j = i + 1; j <= k; ++j) {
                        Var xj = Var::x(j, k), yj = Var::y(k + 1, n - j);
                        CHECK(fourier_conjugate(xc(xj) * xd(xi), fm) == -(xc(yi) * xd(yj)));
                    }
                }
            }
            // the same shapes for every dual pair, whatever its pairing constant
            for (const auto& p : fm.pairs) {
                CHECK(fourier_conjugate(xc(p.source) * xd(p.source), fm) ==
                      WeylOp(ExactScalar(-1)) - xc(p.target) * xd(p.target));
                for (const auto& q : fm.pairs) {
                    if (q.source == p.source) continue;
                    CHECK(fourier_conjugate(xc(q.source) * xd(p.source), fm) == -(xc(p.target) * xd(q.target)));
                }
            }
        }
}

TEST_CASE("the transform is a homomorphism") {
    std::vector<FourierMap> maps;
    for (const auto& d : {OrbitDescriptor::make(6, 2), OrbitDescriptor::make(8, 4, -1), OrbitDescriptor::make(9, 4),
                          OrbitDescriptor::make(10, 3)})
        maps.push_back(build_fourier(d));
    std::vector<Atom> atoms{Atom::scalar("b[1,2]"), Atom::derivation("d[X(alpha_1)]")};
    for (int trial = 0; trial < 200; ++trial) {
        const FourierMap& fm = maps[static_cast<std::size_t>(trial) % maps.size()];
        std::vector<Var> vars;
        for (int i = 0; i < 3; ++i) vars.push_back(fm.source[static_cast<std::size_t>(uniform(0, static_cast<long>(fm.source.size()) - 1))]);
        for (const auto& v : fm.fixed) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        WeylOp a = random_op(vars, 3, 2, atoms), b = random_op(vars, 3, 2, atoms);
        CHECK(fourier_conjugate(a * b, fm) == fourier_conjugate(a, fm) * fourier_conjugate(b, fm));
        CHECK(fourier_conjugate(a + b, fm) == fourier_conjugate(a, fm) + fourier_conjugate(b, fm));
    }
}

TEST_CASE("maximal pairings carry the opposite sign") {
    FourierMap even = build_fourier(OrbitDescriptor::make(8, 4, 1));
    REQUIRE(even.pairs.size() == 3);
    for (const auto& p : even.pairs) {
        CHECK(p.pairing == ExactScalar(-1));
        CHECK(p.source.a == 4);
        CHECK(p.source.b == 8 - p.target.a);
        CHECK(p.target.b == 3);
    }
    CHECK(even.fixed == std::vector<Var>{Var::t()});
    FourierMap odd = build_fourier(OrbitDescriptor::make(7, 3));
    CHECK(odd.ok());
    CHECK(odd.fixed == std::vector<Var>{Var::t(), Var::affine()});
    CHECK(odd.pairs.size() == 2);
}
