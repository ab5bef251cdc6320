#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superalg/z2.hpp"

using namespace superalg;

namespace {

Z2 random_z2(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-20, 20);
    return Z2(d(rng), d(rng));
}

} // namespace

TEST_CASE("twisted product on fixed values") {
    CHECK(z2_mul(Z2(1, 0), Z2(7, -3)) == Z2(7, -3));
    CHECK(z2_mul(Z2(0, 1), Z2(0, 1)) == Z2(1, 0));
    CHECK(z2_mul(Z2(2, 1), Z2(1, 3)) == Z2(5, 7));
}

TEST_CASE("scaling") {
    CHECK(z2_scale(0, Z2(5, -2)) == Z2(0, 0));
    CHECK(z2_scale(2, Z2(1, 1)) == Z2(2, 2));
    CHECK(z2_scale(3, Z2(2, 1)) == Z2(6, 3));
    CHECK(z2_scale(3, Z2(2, 1)) == z2_mul(Z2(3, 0), Z2(2, 1)));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(421);
    for (int i = 0; i < 200; ++i) {
        Z2 a = random_z2(rng), b = random_z2(rng), c = random_z2(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Z2::zero() == a);
        CHECK(a * Z2::one() == a);
    }
}

TEST_CASE("sdim is a ring homomorphism") {
    std::mt19937 rng(57);
    for (int i = 0; i < 200; ++i) {
        Z2 a = random_z2(rng), b = random_z2(rng);
        CHECK((a * b).sdim() == a.sdim() * b.sdim());
        CHECK((a + b).sdim() == a.sdim() + b.sdim());
    }
}

TEST_CASE("scale agrees with multiplication by (k,0)") {
    std::mt19937 rng(98);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 100; ++i) {
        Int k = d(rng);
        Z2 a = random_z2(rng);
        CHECK(z2_scale(k, a) == z2_mul(Z2(k, Int(0)), a));
    }
}
