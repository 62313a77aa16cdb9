#include <doctest.h>

#include "sphorb/parab.hpp"
#include "support.hpp"

#include <algorithm>

using namespace sphorb;

namespace {

/// X_{−α_s} = E_{s+1,s} lies in the block upper triangular p_i unless it crosses the split at i.
bool lowering_in_parabolic(int s, int i) { return !(s <= i && s + 1 > i); }

}  // namespace

TEST_CASE("maximal parabolics") {
    CHECK(build_parabolic(1, 4).nil.dim() == 3);
    ParabolicData p25 = build_parabolic(2, 5);
    CHECK(p25.m.dim() == static_cast<std::size_t>((2 * 2 - 1) + (3 * 3 - 1)));
    CHECK(p25.m.dim() == 11);
    for (int n = 3; n <= 10; ++n)
        for (int i = 1; i < n; ++i) {
            ParabolicData p = build_parabolic(i, n);
            CHECK(p.nil.is_abelian());
            CHECK(p.nil.dim() == static_cast<std::size_t>(i * (n - i)));
            CHECK(p.p.dim() == static_cast<std::size_t>(n * n - 1 - i * (n - i)));
            CHECK(p.p.is_closed());
            CHECK(p.p.contains(algebras::borel(n)));
        }
    CHECK_THROWS(build_parabolic(0, 4));
    CHECK_THROWS(build_parabolic(4, 4));
}

TEST_CASE("restricted forms") {
    OrbitDescriptor d = OrbitDescriptor::make(6, 2);
    for (int i = 1; i < 6; ++i) {
        ParabolicData p = build_parabolic(i, 6);
        RestrictedForms f = restricted_forms(d, i);
        CHECK(f.extension.vanishes_on(p.m));
        CHECK(f.extension.vanishes_on(p.a));
        for (const auto& z : p.nil.basis()) CHECK(f.extension(z) == f.on_parabolic(z));
    }
    for (int n = 4; n <= 9; ++n)
        for (const auto& o : catalog(n))
            for (int i = 1; i < n; ++i) {
                RestrictedForms f = restricted_forms(o, i);
                Subalgebra chain = chain_algebra(o, i);
                if (o.k <= i && i <= n - o.k) {
                    CHECK(f.reductive.vanishes_on(chain));
                } else {
                    // the highest root vector of the middle block pairs with the X entry at (n−j, j+1),
                    // which carries the sign only for the k-th term
                    int j = i < o.k ? i : n - i;
                    LieElement top = LieElement::elementary(n, j + 1, n - j);
                    CHECK(chain.contains(top));
                    CHECK(f.reductive(top) == (j + 1 == o.k ? o.eps : 1));
                }
            }
}

TEST_CASE("coisotropy") {
    OrbitDescriptor d = OrbitDescriptor::make(6, 2);
    ParabolicData p = build_parabolic(1, 6);
    RestrictedForms f = restricted_forms(d, 1);
    CHECK(coisotropic(p.p, f.extension, p.p));
    CHECK(coisotropic(witness_algebra(d, 1), f.extension, p.p));
    // the Cartan subalgebra misses E_12, which is orthogonal to it
    Subalgebra h = algebras::cartan(6);
    LieElement witness = LieElement::elementary(6, 1, 2);
    for (const auto& z : h.basis()) CHECK(sgn(f.extension(bracket(witness, z))) == 0);
    CHECK_FALSE(h.contains(witness));
    CHECK_FALSE(coisotropic(h, f.extension, p.p));
}

TEST_CASE("zero form") {
    for (int n = 3; n <= 5; ++n) {
        Subalgebra p = build_parabolic(1, n).p;
        LinearForm zero = LinearForm::zero(n);
        CHECK(strongly_unipotent(p, zero, p));
        CHECK(unipotent_type(zero, p, p));
        CHECK(form_stabilizer(zero, p) == p);
    }
}

TEST_CASE("witness checks across the catalog") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& o : catalog(n))
            for (int i = 1; i < n; ++i) {
                WitnessReport r = verify_witness(o, i);
                INFO(o.key() << " i=" << i);
                std::string failed;
                for (const auto& f : r.failures()) failed += f + "; ";
                INFO(failed);
                CHECK(r.ok());
                ParabolicData p = build_parabolic(i, n);
                RestrictedForms forms = restricted_forms(o, i);
                Subalgebra b = witness_algebra(o, i);
                CHECK(coisotropic(b, forms.extension, p.p));
                CHECK(strongly_unipotent(b, forms.extension, p.p));
                CHECK(unipotent_type(forms.extension, p.p, b, reductive_candidate(o, i)));
                CHECK(form_stabilizer(forms.extension, p.p).contains(reductive_candidate(o, i)));
                CHECK(p.p.dim() - parabolic_stabilizer(o, i).dim() == static_cast<std::size_t>(2 * o.k * (n - o.k)));
            }
}

TEST_CASE("Borel stabilizer equals b ∩ centralizer") {
    for (int n = 4; n <= 8; ++n)
        for (const auto& o : catalog(n)) {
            Subalgebra b = algebras::borel(n);
            CHECK(borel_form_stabilizer(o) == b.intersection(centralizer(representative_X(o))));
        }
}

TEST_CASE("classification table") {
    DufloParameters t = duflo_classification(OrbitDescriptor::make(8, 3));
    REQUIRE(t.entries.size() == 7);
    CHECK(t.entries[3].branch == DufloBranch::Unipotent);
    CHECK(t.entries[1].branch == DufloBranch::Induced);
    CHECK(t.entries[5].branch == DufloBranch::Induced);
    CHECK(t.entries[5].mirror == 2);
    for (int n = 4; n <= 12; ++n)
        for (const auto& o : catalog(n)) {
            DufloParameters c = duflo_classification(o);
            for (const auto& e : c.entries) {
                CHECK(e.unipotent_type == (o.k <= e.i && e.i <= n - o.k));
                CHECK(e.branch == c.entries[static_cast<std::size_t>(n - e.i - 1)].branch);
                CHECK(e.chain.dim() == c.entries[static_cast<std::size_t>(n - e.i - 1)].chain.dim());
            }
        }
    CHECK(to_string(DufloBranch::Induced) == "induced");
}

TEST_CASE("recursion chain") {
    ChainReport r = recursion_chain(OrbitDescriptor::make(10, 4));
    CHECK(r.ok());
    CHECK(r.ranks == std::vector<int>{7, 5, 3, 1});
    std::vector<int> formula;
    for (int i = 1; i <= 4; ++i) formula.push_back(i < 4 ? 10 - 2 * i - 1 : 10 - 8 - 1);
    CHECK(r.ranks == formula);

    ChainReport even = recursion_chain(OrbitDescriptor::make(8, 4, -1));
    CHECK(even.ok());
    CHECK(even.algebras[2] == algebras::sl_block(8, 4, 2));
    CHECK(even.ranks[2] == 1);
    CHECK(even.ranks[3] == 0);

    ChainReport odd = recursion_chain(OrbitDescriptor::make(9, 4));
    CHECK(odd.ok());
    CHECK(odd.algebras[2] == algebras::sl_block(9, 4, 3));
    CHECK(odd.ranks[2] == 2);

    for (int n = 4; n <= 12; ++n)
        for (const auto& o : catalog(n)) {
            ChainReport c = recursion_chain(o);
            std::string failed;
            for (const auto& f : c.failures) failed += f + "; ";
            INFO(failed);
            CHECK(c.ok());
            for (std::size_t i = 1; i < c.algebras.size(); ++i) CHECK(c.algebras[i - 1].contains(c.algebras[i]));
        }
}

TEST_CASE("generator coverage") {
    GeneratorCoverage g4 = generator_coverage(4);
    CHECK(g4.ok());
    CHECK(g4.generated_dimension == 15);
    int i1 = g4.index_for_root.at(1);
    CHECK((i1 == 2 || i1 == 3));
    for (int n = 3; n <= 7; ++n) {
        GeneratorCoverage g = generator_coverage(n);
        CHECK(g.ok());
        for (int s = 1; s < n; ++s) {
            REQUIRE(g.index_for_root.count(s) == 1);
            CHECK(lowering_in_parabolic(s, g.index_for_root.at(s)));
        }
    }
    CHECK_THROWS(generator_coverage(2));
}

TEST_CASE("amalgamation subalgebra is strongly unipotent") {
    for (int n = 4; n <= 8; ++n)
        for (const auto& o : catalog(n))
            for (const auto& r : amalgamation_check(o)) {
                INFO(o.key() << " (i,j)=(" << r.i << "," << r.j << ")");
                std::string failed;
                for (const auto& f : r.failures) failed += f + "; ";
                INFO(failed);
                CHECK(r.ok());
            }
}

TEST_CASE("amalgamation diagnostics are consistent") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& o : catalog(n))
            for (const auto& r : amalgamation_check(o)) {
                CHECK(r.nil_stabilizer_dim >= r.c_dim);
                CHECK(r.stabilizer_dim <= r.parabolic_dim);
                bool small = 2 * r.c_dim < r.parabolic_dim + r.stabilizer_dim;
                bool reported = std::find(r.failures.begin(), r.failures.end(), "c is too small to be coisotropic") != r.failures.end();
                CHECK(small == reported);
            }
}

TEST_CASE("discrete series indices") {
    CHECK(discrete_series_indices(1, 8) == std::vector<int>{-8, -4, 4, 8});
    CHECK(discrete_series_indices(-1, 6) == std::vector<int>{-6, -2, 2, 6});
    for (int m : discrete_series_indices(1, 20)) CHECK(m % 4 == 0);
}

TEST_CASE("parameter families") {
    using T = ParameterToken;
    OrbitDescriptor generic = OrbitDescriptor::make(7, 2);
    ParameterFamily constant{std::vector<T>(6, T::opaque("a"))};
    CHECK(parameter_family_check(constant, generic).ok);

    ParameterFamily broken = constant;
    broken.tokens[0] = T::opaque("b");
    FamilyCheck bad = parameter_family_check(broken, generic);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failing);
    CHECK(*bad.failing == std::make_pair(1, 6));

    ParameterFamily middle = constant;
    middle.tokens[2] = T::opaque("c");
    FamilyCheck mid = parameter_family_check(middle, generic);
    CHECK_FALSE(mid.ok);
    CHECK(*mid.failing == std::make_pair(2, 3));

    OrbitDescriptor even = OrbitDescriptor::make(6, 3, -1);
    T ds = T::discrete_series(ExactScalar(1), -1, 4);
    ParameterFamily good{{T::opaque("a"), ds, T::character(ExactScalar(1)), ds, T::opaque("a")}};
    CHECK(parameter_family_check(good, even).ok);
    T wrong = T::discrete_series(ExactScalar(1), -1, 2);
    ParameterFamily congruence{{T::opaque("a"), wrong, T::character(ExactScalar(1)), wrong, T::opaque("a")}};
    FamilyCheck cong = parameter_family_check(congruence, even);
    CHECK_FALSE(cong.ok);
    CHECK(*cong.failing == std::make_pair(2, 3));
    T ds_minus = T::discrete_series(ExactScalar(-1), -1, 2);
    ParameterFamily minus{{T::opaque("a"), ds_minus, T::character(ExactScalar(-1)), ds_minus, T::opaque("a")}};
    CHECK(parameter_family_check(minus, even).ok);

    OrbitDescriptor odd = OrbitDescriptor::make(7, 3);
    ExactScalar mi = -ExactScalar::i();
    T top = T::character(mi), below = T::opaque("rho(-i)", mi);
    ParameterFamily odd_ok{{T::opaque("a"), below, top, top, below, T::opaque("a")}};
    CHECK(parameter_family_check(odd_ok, odd).ok);
    T plus_i = T::character(ExactScalar::i());
    ParameterFamily odd_bad{{T::opaque("a"), below, plus_i, plus_i, below, T::opaque("a")}};
    CHECK(*parameter_family_check(odd_bad, odd).failing == std::make_pair(3, 3));
    CHECK_FALSE(parameter_family_check(ParameterFamily{{T::opaque("a")}}, odd).ok);
}
