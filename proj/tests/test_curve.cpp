#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superalg/artin.hpp"
#include "superalg/curve.hpp"

using namespace superalg;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

RatFunc rf(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
    return RatFunc(qp(num), qp(den));
}

RatFunc random_function(std::mt19937& rng, int max_deg = 5, long height = 5) {
    std::uniform_int_distribution<int> deg_d(0, max_deg);
    std::uniform_int_distribution<long> coeff_d(-height, height);
    auto poly = [&]() {
        for (;;) {
            int deg = deg_d(rng);
            std::vector<Rat> c(std::size_t(deg) + 1);
            for (auto& v : c) v = Rat(coeff_d(rng));
            QPoly p{std::move(c)};
            if (!p.is_zero()) return p;
        }
    };
    return RatFunc(poly(), poly());
}

PolyMat pmat(std::initializer_list<std::initializer_list<std::initializer_list<long>>> rows) {
    PolyMat m;
    for (const auto& row : rows) {
        std::vector<QPoly> r;
        for (const auto& entry : row) {
            std::vector<Rat> c;
            for (long v : entry) c.emplace_back(v);
            r.push_back(QPoly(std::move(c)));
        }
        m.push_back(std::move(r));
    }
    return m;
}

PolyMat pmat_mul(const PolyMat& a, const PolyMat& b) {
    PolyMat r(a.size(), std::vector<QPoly>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            QPoly acc;
            for (std::size_t k = 0; k < b.size(); ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

QPoly pmat_det(const PolyMat& m) {
    if (m.size() == 1) return m[0][0];
    if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    QPoly acc;
    for (std::size_t j = 0; j < m.size(); ++j) {
        PolyMat minor;
        for (std::size_t i = 1; i < m.size(); ++i) {
            std::vector<QPoly> row;
            for (std::size_t c = 0; c < m.size(); ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        QPoly term = m[0][j] * pmat_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

PolyMat random_poly_mat(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> coeff_d(-2, 2);
    std::uniform_int_distribution<int> deg_d(0, 2);
    for (;;) {
        PolyMat m(n, std::vector<QPoly>(n));
        for (auto& row : m)
            for (auto& e : row) {
                int deg = deg_d(rng);
                std::vector<Rat> c(std::size_t(deg) + 1);
                for (auto& v : c) v = Rat(coeff_d(rng));
                e = QPoly(std::move(c));
            }
        if (!pmat_det(m).is_zero()) return m;
    }
}

} // namespace

TEST_CASE("order at a point, free odd line") {
    auto model = SuperCurveModel::affine_split();
    CurvePoint p0 = CurvePoint::rational(Rat(0));
    CHECK(ord_at(model, p0, rf({0, 0, 1})) == Z2(2, 2));  // g = t^2
    CHECK(ord_at(model, p0, rf({1})) == Z2(0, 0));
    CHECK(ord_at(model, CurvePoint::rational(Rat(3)), rf({1})) == Z2(0, 0));
}

TEST_CASE("order cross-checked against the composition series oracle") {
    // B/(t^2) for the free split model is Q[t]/(t^2) tensor Q<th>
    auto b_mod_t2 = tensor_product(truncated_polynomial_algebra(2, "t"), exterior_algebra(1));
    CHECK(super_length(b_mod_t2, algebra_as_module(b_mod_t2)) == Z2(2, 2));
    CHECK(ord_at(SuperCurveModel::affine_split(), CurvePoint::rational(Rat(0)), rf({0, 0, 1})) ==
          super_length(b_mod_t2, algebra_as_module(b_mod_t2)));
}

TEST_CASE("order with torsion") {
    auto model = SuperCurveModel::affine_split();
    model.torsion.emplace_back(CurvePoint::rational(Rat(0)), 1);
    CurvePoint p0 = CurvePoint::rational(Rat(0));
    CHECK(ord_at(model, p0, rf({0, 1})) == Z2(1, 2));  // g = t

    // oracle: B/(t) has basis 1 | th_free, th_tors with all products of
    // positive-degree elements zero
    FiniteSuperAlgebra quo;
    quo.names = {"1", "thf", "tht"};
    quo.parity = {0, 1, 1};
    quo.mult.assign(3, std::vector<Vec>(3, Vec(3, Rat(0))));
    for (int i = 0; i < 3; ++i) {
        quo.mult[0][i][std::size_t(i)] = 1;
        quo.mult[i][0][std::size_t(i)] = 1;
    }
    quo.mult[0][0][0] = 1;
    quo.unit = {Rat(1), Rat(0), Rat(0)};
    quo.validate();
    CHECK(super_length(quo, algebra_as_module(quo)) == Z2(1, 2));
    CHECK(ord_at(model, p0, rf({0, 1})) == super_length(quo, algebra_as_module(quo)));

    // away from the torsion point nothing changes
    CHECK(ord_at(model, CurvePoint::rational(Rat(1)), rf({-1, 1})) == Z2(1, 1));
}

TEST_CASE("order additivity on torsion-free models") {
    std::mt19937 rng(1234);
    auto affine = SuperCurveModel::affine_split();
    auto proj = SuperCurveModel::projective_split();
    proj.twist.emplace_back(CurvePoint::rational(Rat(1)), 3);
    auto bosonic = SuperCurveModel::affine_split();
    bosonic.odd_rank = 0;
    std::vector<CurvePoint> pts = {CurvePoint::rational(Rat(0)), CurvePoint::rational(Rat(-1)),
                                   CurvePoint::finite(qp({1, 0, 1})), CurvePoint::infinity()};
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc g = random_function(rng), h = random_function(rng);
        for (const auto& model : {affine, proj, bosonic})
            for (const auto& p : pts) {
                if (!model.has_point(p)) continue;
                CHECK(ord_at(model, p, g * h) == ord_at(model, p, g) + ord_at(model, p, h));
            }
    }
}

TEST_CASE("divisor of t on the projective split model") {
    auto model = SuperCurveModel::projective_split();
    auto d = div_model(model, rf({0, 1}));
    REQUIRE(d.terms.size() == 2);
    CHECK(d.coefficient(CurvePoint::rational(Rat(0))) == Z2(1, 1));
    CHECK(d.coefficient(CurvePoint::infinity()) == Z2(-1, -1));
    CHECK(divisor_degree(d) == Z2(0, 0));
}

TEST_CASE("divisor of a constant is empty") {
    CHECK(div_model(SuperCurveModel::projective_split(), rf({7})).terms.empty());
}

TEST_CASE("divisor of t^2/(t-1)") {
    auto model = SuperCurveModel::projective_split();
    auto d = div_model(model, rf({0, 0, 1}, {-1, 1}));
    REQUIRE(d.terms.size() == 3);
    CHECK(d.coefficient(CurvePoint::rational(Rat(0))) == Z2(2, 2));
    CHECK(d.coefficient(CurvePoint::rational(Rat(1))) == Z2(-1, -1));
    CHECK(d.coefficient(CurvePoint::infinity()) == Z2(-1, -1));
}

TEST_CASE("principal divisors balance on projective models") {
    std::mt19937 rng(77);
    auto model = SuperCurveModel::projective_split();
    model.twist.emplace_back(CurvePoint::rational(Rat(2)), -1);
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc g = random_function(rng);
        CHECK(divisor_degree(div_model(model, g)) == Z2(0, 0));
    }
}

TEST_CASE("purely even witness model has vanishing odd orders") {
    auto model = SuperCurveModel::projective_split();
    model.odd_rank = 0;
    auto d = div_model(model, rf({0, 1}));
    CHECK(d.coefficient(CurvePoint::rational(Rat(0))) == Z2(1, 0));
    CHECK(d.coefficient(CurvePoint::infinity()) == Z2(-1, 0));
}

TEST_CASE("lattice distance basics") {
    CurvePoint p0 = CurvePoint::rational(Rat(0));
    SuperLattice m{p0, pmat({{{1}}}), pmat({{{1}}})};
    CHECK(lattice_distance(m, m) == Z2(0, 0));

    SuperLattice t2{p0, pmat({{{0, 0, 1}}}), pmat({{{1}}})};
    CHECK(lattice_distance(m, t2) == Z2(2, 0));
    CHECK(lattice_distance(t2, m) == Z2(-2, 0));

    SuperLattice odd_t{p0, pmat({{{1}}}), pmat({{{0, 1}}})};
    CHECK(lattice_distance(m, odd_t) == Z2(0, 1));
}

TEST_CASE("lattice distance against the berezinian, restricted and projected") {
    std::mt19937 rng(99);
    CurvePoint p0 = CurvePoint::rational(Rat(0));
    for (int trial = 0; trial < 15; ++trial) {
        PolyMat e = random_poly_mat(rng, 2), o = random_poly_mat(rng, 2);
        SuperLattice m{p0, e, o};
        PolyMat c1 = random_poly_mat(rng, 2);
        // restricted class: phi = diag(C1, I)
        SuperLattice phim{p0, pmat_mul(c1, e), o};
        Z2 dist = lattice_distance(m, phim);
        CHECK(dist == ord_even_base(p0, RatFunc(pmat_det(c1))));
        // general block-diagonal even automorphism: only the projected
        // identity survives
        PolyMat c4 = random_poly_mat(rng, 2);
        SuperLattice phim2{p0, pmat_mul(c1, e), pmat_mul(c4, o)};
        Z2 dist2 = lattice_distance(m, phim2);
        RatFunc ber(pmat_det(c1), pmat_det(c4));
        CHECK(dist2.sdim() == ord_even_base(p0, ber).sdim());
    }
}

TEST_CASE("the documented distance/berezinian discrepancy") {
    CurvePoint p0 = CurvePoint::rational(Rat(0));
    SuperLattice m{p0, pmat({{{1}}}), pmat({{{1}}})};
    SuperLattice phim{p0, pmat({{{1}}}), pmat({{{0, 1}}})};  // phi = diag(1, t)
    Z2 lhs = lattice_distance(m, phim);
    Z2 rhs = ord_even_base(p0, RatFunc(qp({1}), qp({0, 1})));  // ord(1/t)
    CHECK(lhs == Z2(0, 1));
    CHECK(rhs == Z2(-1, 0));
    CHECK(lhs != rhs);               // the full identity fails here
    CHECK(lhs.sdim() == rhs.sdim()); // the projected identity holds
}

TEST_CASE("berezinian of multiplication on the double cover") {
    auto cover = builtin_double_cover();
    CHECK(ber_of_multiplication(cover, rf({1})) == rf({1}));
    CHECK(ber_of_multiplication(cover, rf({0, 1})) == rf({0, -1}));   // g = s -> -t
    CHECK(ber_of_multiplication(cover, rf({-1, 1})) == rf({1, -1}));  // g = s-1 -> 1-t
    // g = u(t) + s v(t) -> u^2 - t v^2 (u = t = s^2, v = 2)
    RatFunc g = rf({0, 2, 1});  // s^2 + 2s
    RatFunc expect = rf({0, 0, 1}) - rf({0, 4});  // t^2 - 4t
    CHECK(ber_of_multiplication(cover, g) == expect);
}

TEST_CASE("cover point bookkeeping") {
    auto cover = builtin_double_cover();
    CHECK(image_point(cover, CurvePoint::rational(Rat(2))) == CurvePoint::rational(Rat(4)));
    CHECK(image_point(cover, CurvePoint::finite(qp({1, 0, 1}))) ==
          CurvePoint::rational(Rat(-1)));  // s^2+1 maps to t = -1
    auto f1 = fiber_points(cover, CurvePoint::rational(Rat(4)));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].residue_degree == 1);
    auto f2 = fiber_points(cover, CurvePoint::rational(Rat(-1)));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].residue_degree == 2);
    auto f3 = fiber_points(cover, CurvePoint::rational(Rat(0)));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].residue_degree == 1);  // ramified: single point s = 0
}

TEST_CASE("fibre order identity on the double cover") {
    std::mt19937 rng(314);
    auto cover = builtin_double_cover();
    std::vector<CurvePoint> targets = {CurvePoint::rational(Rat(0)), CurvePoint::rational(Rat(1)),
                                       CurvePoint::rational(Rat(4)), CurvePoint::rational(Rat(-1)),
                                       CurvePoint::finite(qp({-2, 0, 1}))};
    for (int trial = 0; trial < 25; ++trial) {
        RatFunc g = random_function(rng, 3, 3);
        RatFunc ber = ber_of_multiplication(cover, g);
        for (const auto& y : targets) {
            Z2 lhs = ord_at(cover.target, y, ber);
            Z2 rhs;
            for (const auto& x : fiber_points(cover, y))
                rhs += z2_scale(Int(x.residue_degree), ord_at(cover.source, x.point, g));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cover certificate failures") {
    auto broken = builtin_double_cover();
    broken.odd_transport = QPoly();
    CHECK_THROWS_AS(ber_of_multiplication(broken, rf({0, 1})), kernel_error);
    auto torsioned = builtin_double_cover();
    torsioned.source.torsion.emplace_back(CurvePoint::rational(Rat(0)), 1);
    CHECK_THROWS_AS(ber_of_multiplication(torsioned, rf({0, 1})), kernel_error);
    CHECK_THROWS_AS(ber_of_multiplication(builtin_double_cover(), RatFunc(0)), kernel_error);
}

TEST_CASE("model validation") {
    auto m = SuperCurveModel::affine_split();
    m.odd_rank = 0;
    m.twist.emplace_back(CurvePoint::rational(Rat(0)), 1);
    CHECK_THROWS_AS(m.validate(), kernel_error);
    auto inf_twist = SuperCurveModel::affine_split();
    inf_twist.twist.emplace_back(CurvePoint::infinity(), 1);
    CHECK_THROWS_AS(inf_twist.validate(), kernel_error);
    CHECK_THROWS_AS(ord_at(SuperCurveModel::affine_split(), CurvePoint::infinity(), rf({0, 1})),
                    kernel_error);
    CHECK_THROWS_AS(CurvePoint::finite(qp({-1, 0, 1})), kernel_error);  // t^2-1 reducible
}
