#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superalg/supermatrix.hpp"

using namespace superalg;

namespace {

// Random homogeneous scalar of the requested parity over Q<e_1..e_k>.
Grassmann random_homogeneous(std::mt19937& rng, int k, int parity, int max_terms = 3) {
    std::uniform_int_distribution<int> mask_d(0, (1 << k) - 1);
    std::uniform_int_distribution<long> coeff_d(-4, 4);
    std::uniform_int_distribution<int> count_d(1, max_terms);
    Grassmann g(k);
    int n = count_d(rng);
    for (int i = 0; i < n; ++i) {
        int mask = mask_d(rng);
        if ((std::popcount(unsigned(mask)) & 1) != parity) continue;
        g += [&] {
            Grassmann t(k);
            t.set(unsigned(mask), Rat(coeff_d(rng)));
            return t;
        }();
    }
    return g;
}

Grassmann random_even_unit(std::mt19937& rng, int k, long body_min = 1, long body_max = 5) {
    std::uniform_int_distribution<long> body_d(body_min, body_max);
    std::uniform_int_distribution<int> sign_d(0, 1);
    Grassmann g = random_homogeneous(rng, k, 0);
    long body = body_d(rng) * (sign_d(rng) ? 1 : -1);
    g = g.soul() + Grassmann(k, Rat(body));
    return g;
}

// Even invertible supermatrix: triangular integer bodies on A and D keep
// both blocks (and hence the Schur complement) invertible.
SuperMatrix random_even_invertible(std::mt19937& rng, int p, int q, int k) {
    std::uniform_int_distribution<long> int_d(-3, 3);
    auto block = [&](int r, int c, int parity, bool triangular) {
        GrassmannMat m = gmat_zero(r, c, k);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                Grassmann soul = random_homogeneous(rng, k, parity).soul();
                if (parity == 1) {
                    m[i][j] = random_homogeneous(rng, k, 1);
                } else if (triangular) {
                    Rat body = i == j ? Rat(int_d(rng) * 2 + 1) : (i < j ? Rat(int_d(rng)) : Rat(0));
                    m[i][j] = soul + Grassmann(k, body);
                } else {
                    m[i][j] = soul + Grassmann(k, Rat(int_d(rng)));
                }
            }
        return m;
    };
    return SuperMatrix(p, q, block(p, p, 0, true), block(p, q, 1, false), block(q, p, 1, false),
                       block(q, q, 0, true));
}

} // namespace

TEST_CASE("exterior relations") {
    int k = 3;
    auto e1 = Grassmann::generator(1, k);
    auto e2 = Grassmann::generator(2, k);
    CHECK(e1 * e2 == -(e2 * e1));
    CHECK((e1 * e1).is_zero());
    CHECK((e1 * e2 * e1).is_zero());
}

TEST_CASE("multiplication is associative and supercommutative") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 4;
        int pa = trial % 2, pb = (trial / 2) % 2, pc = (trial / 4) % 2;
        Grassmann a = random_homogeneous(rng, k, pa);
        Grassmann b = random_homogeneous(rng, k, pb);
        Grassmann c = random_homogeneous(rng, k, pc);
        CHECK((a * b) * c == a * (b * c));
        Grassmann ab = a * b, ba = b * a;
        if (pa * pb == 1)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
    }
}

TEST_CASE("even scalar inversion") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Grassmann x = random_even_unit(rng, 4);
        REQUIRE(x.invertible());
        CHECK(x * x.inverse() == Grassmann(4, Rat(1)));
    }
    Grassmann nilpotent = Grassmann::generator(1, 2) * Grassmann::generator(2, 2);
    CHECK_FALSE(nilpotent.invertible());
    CHECK_THROWS_AS(nilpotent.inverse(), kernel_error);
}

TEST_CASE("berezinian of the identity") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            CHECK(berezinian(SuperMatrix::identity(p, q, 2)) == Grassmann(2, Rat(1)));
}

TEST_CASE("berezinian of block-diagonal matrices") {
    std::mt19937 rng(13);
    int k = 4;
    for (int trial = 0; trial < 25; ++trial) {
        SuperMatrix m = random_even_invertible(rng, 2, 2, k);
        SuperMatrix diag(2, 2, m.a, gmat_zero(2, 2, k), gmat_zero(2, 2, k), m.d);
        Grassmann expected = det_even(m.a) * det_even(m.d).inverse();
        CHECK(berezinian(diag) == expected);
    }
}

TEST_CASE("rank 1|1 worked value") {
    int k = 2;
    auto e1 = Grassmann::generator(1, k);
    auto e2 = Grassmann::generator(2, k);
    SuperMatrix m(1, 1, {{Grassmann(k, Rat(1))}}, {{e1}}, {{e2}}, {{Grassmann(k, Rat(1))}});
    Grassmann expected = Grassmann(k, Rat(1)) - e1 * e2;
    CHECK(berezinian(m) == expected);
}

TEST_CASE("unitriangular product worked value") {
    int k = 2;
    auto e1 = Grassmann::generator(1, k);
    auto e2 = Grassmann::generator(2, k);
    Grassmann one(k, Rat(1)), zero(k);
    SuperMatrix m(1, 1, {{one}}, {{e1}}, {{zero}}, {{one}});
    SuperMatrix n(1, 1, {{one}}, {{zero}}, {{e2}}, {{one}});
    SuperMatrix mn = supermatrix_mul(m, n);
    CHECK(mn.a[0][0] == one + e1 * e2);
    CHECK(mn.b[0][0] == e1);
    CHECK(mn.c[0][0] == e2);
    CHECK(mn.d[0][0] == one);
    CHECK(supermatrix_mul(m, SuperMatrix::identity(1, 1, k)).a[0][0] == m.a[0][0]);
}

TEST_CASE("block-diagonal products multiply blockwise") {
    std::mt19937 rng(29);
    int k = 3;
    for (int trial = 0; trial < 10; ++trial) {
        SuperMatrix m = random_even_invertible(rng, 2, 2, k);
        SuperMatrix n = random_even_invertible(rng, 2, 2, k);
        SuperMatrix dm(2, 2, m.a, gmat_zero(2, 2, k), gmat_zero(2, 2, k), m.d);
        SuperMatrix dn(2, 2, n.a, gmat_zero(2, 2, k), gmat_zero(2, 2, k), n.d);
        SuperMatrix prod = supermatrix_mul(dm, dn);
        CHECK(prod.a == gmat_mul(m.a, n.a));
        CHECK(prod.d == gmat_mul(m.d, n.d));
        for (const auto& row : prod.b)
            for (const auto& e : row) CHECK(e.is_zero());
    }
    CHECK_THROWS_AS(
        supermatrix_mul(SuperMatrix::identity(1, 1, 2), SuperMatrix::identity(2, 1, 2)),
        kernel_error);
}

TEST_CASE("berezinian is multiplicative") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int p = 1 + trial % 3, q = 1 + (trial / 3) % 3, k = 2 + (trial / 9) % 3;
        SuperMatrix m = random_even_invertible(rng, p, q, k);
        SuperMatrix n = random_even_invertible(rng, p, q, k);
        CHECK(berezinian(supermatrix_mul(m, n)) == berezinian(m) * berezinian(n));
    }
}

TEST_CASE("purely even berezinian is the determinant") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        SuperMatrix m = random_even_invertible(rng, 3, 0, 3);
        CHECK(berezinian(m) == det_even(m.a));
    }
}

TEST_CASE("parity violations are rejected") {
    int k = 2;
    auto e1 = Grassmann::generator(1, k);
    // odd entry in the even-even block
    SuperMatrix bad(1, 1, {{e1}}, {{Grassmann(k)}}, {{Grassmann(k)}}, {{Grassmann(k, Rat(1))}});
    CHECK_FALSE(bad.is_even());
    CHECK_THROWS_AS(berezinian(bad), kernel_error);
    // non-invertible odd-odd block
    SuperMatrix sing(1, 1, {{Grassmann(k, Rat(1))}}, {{Grassmann(k)}}, {{Grassmann(k)}},
                     {{Grassmann(k)}});
    CHECK_THROWS_AS(berezinian(sing), kernel_error);
}
