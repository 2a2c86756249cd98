#include <doctest.h>

#include <random>

#include "recurv/errors.hpp"
#include "recurv/rational_function.hpp"
#include "support/generators.hpp"

using namespace recurv;
using recurv::testing::random_point;
using recurv::testing::random_rational_function;

namespace {
const std::vector<std::string> kNames = {"x1", "x2", "x3", "x4"};
RationalFunction rvar(int i) { return RationalFunction::variable(4, i); }
} // namespace

TEST_CASE("canonical form and printing") {
    RationalFunction f = (rvar(0) * rvar(0) * rvar(1) + rvar(0).scaled(make_rational(2))) /
                         (rvar(1).pow(3));
    CHECK(f.str(kNames) == "(x1^2*x2 + 2*x1)/(x2^3)");

    // (1/4)(1/x2 + 1/x1) prints with integer coefficients
    RationalFunction quarter = RationalFunction::constant(4, make_rational(1, 4));
    RationalFunction g = quarter * (rvar(1).inverse() + rvar(0).inverse());
    CHECK(g.str(kNames) == "(x1 + x2)/(4*x1*x2)");

    CHECK(RationalFunction::zero(4).str(kNames) == "0");
    CHECK(RationalFunction::constant(4, make_rational(-5, 7)).str(kNames) == "(-5)/(7)");
}

TEST_CASE("reduction") {
    // ((x1)^2 - (x2)^2) / (x1 - x2) = x1 + x2
    RationalFunction f = (rvar(0).pow(2) - rvar(1).pow(2)) / (rvar(0) - rvar(1));
    CHECK(f.str(kNames) == "x1 + x2");
    CHECK(f.den().is_constant());

    // is_zero by canonical form
    RationalFunction g = (rvar(0) + rvar(1)) - rvar(0) - rvar(1);
    CHECK(g.is_zero());
    RationalFunction h =
        rvar(0).pow(2) - rvar(1).pow(2) - (rvar(0) - rvar(1)) * (rvar(0) + rvar(1));
    CHECK(h.is_zero());
    CHECK(!(rvar(0) - rvar(1)).is_zero());
}

TEST_CASE("add with common denominator") {
    RationalFunction f = rvar(0) / rvar(1) + rvar(1) / rvar(0);
    CHECK(f.str(kNames) == "(x1^2 + x2^2)/(x1*x2)");
    RationalFunction any = rvar(2) / (rvar(0) + rvar(1));
    CHECK((any * RationalFunction::zero(4)).is_zero());
}

TEST_CASE("field axioms at canonical-form level") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        RationalFunction a = random_rational_function(rng, 3);
        RationalFunction b = random_rational_function(rng, 3);
        RationalFunction c = random_rational_function(rng, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a / a).is_one());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("derivative: linearity, Leibniz, quotient") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        RationalFunction f = random_rational_function(rng, 3);
        RationalFunction g = random_rational_function(rng, 3);
        for (int v = 0; v < 3; ++v) {
            CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
            CHECK((f * g).derivative(v) ==
                  f.derivative(v) * g + f * g.derivative(v));
        }
    }
    // d/dx1 of (1/4)(1/x2 + 1/x1) = -1/(4 x1^2)
    RationalFunction quarter = RationalFunction::constant(4, make_rational(1, 4));
    RationalFunction f = quarter * (rvar(1).inverse() + rvar(0).inverse());
    CHECK(f.derivative(0).str(kNames) == "(-1)/(4*x1^2)");
    // absent variable
    CHECK((rvar(0) * rvar(1)).derivative(2).is_zero());
    // quotient rule on a monomial fraction
    CHECK((rvar(0) / rvar(1)).derivative(1).str(kNames) == "(-x1)/(x2^2)");
}

TEST_CASE("evaluation and poles") {
    RationalFunction quarter = RationalFunction::constant(4, make_rational(1, 4));
    RationalFunction f = quarter * (rvar(1).inverse() + rvar(0).inverse());
    std::vector<Rational> ones(4, Rational(1));
    CHECK(f.evaluate(ones) == make_rational(1, 2));
    CHECK(RationalFunction::zero(4).evaluate(ones) == 0);

    RationalFunction pole = RationalFunction::one(4) / (rvar(0) - rvar(1));
    std::vector<Rational> bad = {Rational(2), Rational(2), Rational(1), Rational(1)};
    CHECK_THROWS_AS((void)pole.evaluate(bad), PoleError);
}

TEST_CASE("evaluation homomorphism on random samples") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        RationalFunction a = random_rational_function(rng, 3);
        RationalFunction b = random_rational_function(rng, 3);
        auto pt = random_point(rng, 3);
        try {
            Rational va = a.evaluate(pt), vb = b.evaluate(pt);
            CHECK((a + b).evaluate(pt) == va + vb);
            CHECK((a * b).evaluate(pt) == va * vb);
        } catch (const PoleError&) {
            continue; // unlucky sample point
        }
    }
}

TEST_CASE("derivative/evaluation consistency via central differences") {
    std::mt19937 rng(31);
    const double h = 1e-4, tol = 1e-6;
    int checked = 0;
    for (int trial = 0; trial < 10 && checked < 5; ++trial) {
        RationalFunction f = random_rational_function(rng, 3);
        auto pt = random_point(rng, 3);
        std::vector<double> p;
        for (const auto& q : pt) p.push_back(rational_to_double(q));
        for (int v = 0; v < 3; ++v) {
            try {
                Rational exact = f.derivative(v).evaluate(pt);
                std::vector<double> lo = p, hi = p;
                lo[v] -= h;
                hi[v] += h;
                double fd = (f.evaluate_double(hi) - f.evaluate_double(lo)) / (2 * h);
                double ex = rational_to_double(exact);
                double denom = std::max(1.0, std::abs(ex));
                CHECK(std::abs(fd - ex) / denom < tol);
                ++checked;
            } catch (const PoleError&) {
                continue;
            }
        }
    }
    CHECK(checked >= 5);
}

TEST_CASE("division by zero is reported") {
    CHECK_THROWS_AS(rvar(0) / RationalFunction::zero(4), DivisionByZeroError);
    CHECK_THROWS_AS(RationalFunction(Polynomial::one(4), Polynomial::zero(4)),
                    DivisionByZeroError);
}
