#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superalg/cohomology.hpp"

using namespace superalg;

TEST_CASE("line cohomology fixed values") {
    CHECK(line_cohomology(1, LineBundle::trivial()) == std::pair<Int, Int>(1, 1));
    CHECK(line_cohomology(3, LineBundle::canonical()) == std::pair<Int, Int>(3, 1));
    CHECK(line_cohomology(0, LineBundle::generic(-1)) == std::pair<Int, Int>(0, 0));
    CHECK(line_cohomology(2, LineBundle::generic(5)) == std::pair<Int, Int>(4, 0));
    CHECK(line_cohomology(2, LineBundle::generic(-3)) == std::pair<Int, Int>(0, 4));
    CHECK(line_cohomology(2, LineBundle::explicit_data(2, 1)) == std::pair<Int, Int>(1, 0));
}

TEST_CASE("line cohomology guards") {
    CHECK_THROWS_AS(line_cohomology(2, LineBundle::generic(1)), kernel_error);
    CHECK_THROWS_AS(line_cohomology(2, LineBundle::explicit_data(3, 0)), kernel_error);  // chi=2>0
    CHECK_THROWS_AS(line_cohomology(1, LineBundle::explicit_data(0, -1)), kernel_error);
}

TEST_CASE("Riemann-Roch consistency across descriptors") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> gd(0, 4), dd(-6, 8);
    for (int trial = 0; trial < 200; ++trial) {
        Int g = gd(rng);
        Int d = dd(rng);
        LineBundle l = LineBundle::generic(d);
        try {
            auto [h0, h1] = line_cohomology(g, l);
            CHECK(h0 - h1 == d - g + 1);
            CHECK(h0 >= 0);
            CHECK(h1 >= 0);
        } catch (const kernel_error&) {
            // ambiguous range, refused by design
            CHECK((g >= 2 && d >= 0 && d < g));
        }
    }
}

TEST_CASE("Serre duality in the bookkeeping") {
    for (long g = 0; g <= 5; ++g) {
        auto t = line_cohomology(g, LineBundle::trivial());
        auto k = line_cohomology(g, LineBundle::canonical());
        CHECK(t.first == k.second);
        CHECK(t.second == k.first);
    }
}

TEST_CASE("hodge table for genus one with trivial odd line") {
    HodgeTable t = hodge_table(1, LineBundle::trivial());
    CHECK(t.h[0][0] == SuperDim{1, 1});
    CHECK(t.h[0][1] == SuperDim{1, 1});
    CHECK(t.h[1][0] == SuperDim{2, 2});
    CHECK(t.h[1][1] == SuperDim{2, 2});
    CHECK(t.betti[1] == 2);
    FrolicherReport r = frolicher_report(t);
    CHECK_FALSE(r.degenerate_compatible);
    CHECK(r.verdict() == "incompatible");
    // the even-count bookkeeping used for the comparison
    CHECK(r.rows[1].plus_sum == 4);
    CHECK(r.rows[1].betti == 2);
    CHECK(r.rows[0].compatible);
}

TEST_CASE("hodge table with vanishing odd contributions") {
    HodgeTable t = hodge_table(0, LineBundle::generic(-1));
    CHECK(t.h[0][0] == SuperDim{1, 0});
    CHECK(t.h[0][1] == SuperDim{0, 0});
    CHECK(t.h[1][0] == SuperDim{0, 0});
    FrolicherReport r = frolicher_report(t);
    CHECK(r.degenerate_compatible);
}

TEST_CASE("hodge table for a nontrivial degree-zero odd line") {
    // h^0(L) = h^1(L) = 0, L^2 also nontrivial of degree 0,
    // L (x) Omega of degree 0 with no sections
    HodgeTable t = hodge_table(1, LineBundle::explicit_data(0, 0), LineBundle::explicit_data(0, 0),
                               LineBundle::explicit_data(0, 0));
    CHECK(t.h[0][1] == SuperDim{1, 0});
    CHECK(t.h[1][0] == SuperDim{1, 0});
    FrolicherReport r = frolicher_report(t);
    CHECK(r.rows[1].plus_sum == 2);
    CHECK(r.degenerate_compatible);
}

TEST_CASE("hodge table requires matching auxiliary degrees") {
    CHECK_THROWS_AS(hodge_table(1, LineBundle::explicit_data(1, 1)), kernel_error);
    CHECK_THROWS_AS(hodge_table(1, LineBundle::explicit_data(1, 1),
                                LineBundle::explicit_data(3, 2), LineBundle::explicit_data(1, 1)),
                    kernel_error);
    CHECK(hodge_table(1, LineBundle::explicit_data(1, 1), LineBundle::explicit_data(2, 2),
                      LineBundle::explicit_data(1, 1))
              .h[0][0] == SuperDim{1, 1});
}

TEST_CASE("h00 even part is always one") {
    for (long g : {0L, 1L, 2L, 3L}) {
        HodgeTable t = hodge_table(g, LineBundle::generic(2 * g + 1));
        CHECK(t.h[0][0].even == 1);
    }
}

TEST_CASE("integral forms table dualizes indices and keeps dimensions") {
    HodgeTable t = hodge_table(1, LineBundle::trivial());
    IntegralFormsTable d = integral_forms_table(t);
    CHECK(d.entries.at({0, 0}) == t.h[0][0]);
    CHECK(d.entries.at({0, -1}) == t.h[0][1]);
    CHECK(d.entries.at({1, -1}) == t.h[1][1]);
    CHECK(d.entries.at({1, 0}) == t.h[1][0]);
    HodgeTable z = hodge_table(0, LineBundle::generic(-1));
    CHECK(integral_forms_table(z).entries.at({1, 0}) == SuperDim{0, 0});
}

TEST_CASE("the differential squares to zero") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> md(0, 2), nd(0, 2), ed(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        int m = md(rng), n = nd(rng);
        derham::Monomial mono;
        mono.a.resize(std::size_t(m));
        mono.b.resize(std::size_t(n));
        for (auto& x : mono.a) x = ed(rng);
        for (auto& x : mono.b) x = ed(rng);
        mono.j_mask = std::uniform_int_distribution<int>(0, (1 << n) - 1)(rng);
        mono.k_mask = std::uniform_int_distribution<int>(0, (1 << m) - 1)(rng);
        std::map<derham::Monomial, Rat> acc;
        for (auto& [m1, c1] : derham::differential(mono))
            for (auto& [m2, c2] : derham::differential(m1)) acc[m2] += c1 * c2;
        for (auto& [mm, c] : acc) CHECK(c == 0);
    }
}

TEST_CASE("koszul strands are acyclic") {
    for (int n = 1; n <= 3; ++n) {
        auto v = koszul_acyclicity(n, 4);
        CHECK(v.acyclic);
        REQUIRE(v.nonzero.size() == 1);
        CHECK(std::get<0>(v.nonzero[0]) == 0);
        CHECK(std::get<1>(v.nonzero[0]) == 0);
        CHECK(std::get<2>(v.nonzero[0]) == 1);
    }
    CHECK(koszul_acyclicity(3, 3).acyclic);
    CHECK_THROWS_AS(koszul_acyclicity(4, 4), kernel_error);
    CHECK_THROWS_AS(koszul_acyclicity(2, 9), kernel_error);
}

TEST_CASE("affine super Poincare comparison") {
    auto v = affine_super_poincare(1, 1, 4);
    CHECK(v.equal);
    auto v2 = affine_super_poincare(2, 1, 3);
    CHECK(v2.equal);
    auto v0 = affine_super_poincare(0, 1, 4);  // reduces to the Koszul case
    CHECK(v0.equal);
    for (auto& [w, p, ds, db] : v0.table) {
        CHECK(w == 0);
        CHECK(p == 0);
        CHECK(ds == 1);
    }
    CHECK_THROWS_AS(affine_super_poincare(3, 1, 2), kernel_error);
    CHECK_THROWS_AS(affine_super_poincare(1, 1, 7), kernel_error);
}
