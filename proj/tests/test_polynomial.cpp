#include <doctest.h>

#include <random>

#include "recurv/polynomial.hpp"
#include "support/generators.hpp"

using namespace recurv;
using recurv::testing::random_nonzero_polynomial;
using recurv::testing::random_point;
using recurv::testing::random_polynomial;

namespace {
const std::vector<std::string> kNames = {"x1", "x2", "x3", "x4"};
Polynomial var(int i) { return Polynomial::variable(4, i); }
} // namespace

TEST_CASE("graded lex order and canonical terms") {
    Polynomial p = var(0) * var(0) * var(1) + var(0).scaled(make_rational(2));
    CHECK(p.str(kNames) == "x1^2*x2 + 2*x1");
    CHECK(p.total_degree() == 3);
    CHECK(p.term_count() == 2);

    Polynomial q = var(0) - var(0);
    CHECK(q.is_zero());
    CHECK(q.str(kNames) == "0");
}

TEST_CASE("arithmetic basics") {
    Polynomial a = var(0) + var(1);
    Polynomial b = var(0) - var(1);
    CHECK((a * b).str(kNames) == "x1^2 - x2^2");
    CHECK((a + b).str(kNames) == "2*x1");
    CHECK(a.pow(2).str(kNames) == "x1^2 + 2*x1*x2 + x2^2");
}

TEST_CASE("exact division") {
    Polynomial a = var(0).pow(2) - var(1).pow(2);
    Polynomial b = var(0) - var(1);
    auto q = Polynomial::divide_exact(a, b);
    REQUIRE(q.has_value());
    CHECK(q->str(kNames) == "x1 + x2");
    CHECK(!Polynomial::divide_exact(var(0) + Polynomial::one(4), var(1)).has_value());
}

TEST_CASE("gcd of multivariate polynomials") {
    Polynomial a = (var(0) + var(1)) * (var(0) - var(1));
    Polynomial b = (var(0) + var(1)) * var(2);
    CHECK(Polynomial::gcd(a, b).str(kNames) == "x1 + x2");

    // content and monomial paths
    Polynomial c = (var(0) * var(1)).scaled(make_rational(6));
    Polynomial d = (var(0) * var(0)).scaled(make_rational(4));
    CHECK(Polynomial::gcd(c, d).str(kNames) == "x1");

    // gcd of coprime polynomials is 1
    CHECK(Polynomial::gcd(var(0) + Polynomial::one(4), var(1) + Polynomial::one(4))
              .str(kNames) == "1");
}

TEST_CASE("gcd property: g divides both and the cofactors are coprime") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial g = random_nonzero_polynomial(rng, 3, 2, 3);
        Polynomial a = g * random_nonzero_polynomial(rng, 3, 2, 3);
        Polynomial b = g * random_nonzero_polynomial(rng, 3, 2, 3);
        Polynomial d = Polynomial::gcd(a, b);
        auto qa = Polynomial::divide_exact(a, d);
        auto qb = Polynomial::divide_exact(b, d);
        REQUIRE(qa.has_value());
        REQUIRE(qb.has_value());
        CHECK(Polynomial::divide_exact(d, g.unit_normal()).has_value());
        CHECK(Polynomial::gcd(*qa, *qb).is_constant());
    }
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = random_polynomial(rng, 3);
        Polynomial g = random_polynomial(rng, 3);
        for (int v = 0; v < 3; ++v) {
            CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
        }
    }
}

TEST_CASE("evaluation homomorphism") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial f = random_polynomial(rng, 3);
        Polynomial g = random_polynomial(rng, 3);
        auto pt = random_point(rng, 3);
        CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    }
}

TEST_CASE("exact square root") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial h = random_nonzero_polynomial(rng, 3, 2, 3);
        Polynomial sq = h * h;
        auto r = sq.sqrt_exact();
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
    }
    Polynomial not_square = var(0) + Polynomial::one(4);
    CHECK(!(not_square * (var(0) + var(1))).sqrt_exact().has_value());
}
