#include <doctest.h>

#include "recurv/expr.hpp"

using namespace recurv;

namespace {
ChartPtr chart4() { return Chart::standard(4); }
std::span<const std::string> names(const ChartPtr& c) { return c->coordinates; }
} // namespace

TEST_CASE("literals, coordinates, precedence") {
    auto c = chart4();
    CHECK(parse_expression("x2", *c).str(names(c)) == "x2");
    CHECK(parse_expression("0", *c).is_zero());
    CHECK(parse_expression("5/7", *c).str(names(c)) == "(5)/(7)");
    CHECK(parse_expression("-2", *c).str(names(c)) == "-2");
    // ^ binds tighter than unary minus
    CHECK(parse_expression("-x1^2", *c) == -parse_expression("x1^2", *c));
    // * / before + -
    CHECK(parse_expression("x1 + x2*x3", *c) ==
          parse_expression("x1", *c) + parse_expression("x2", *c) * parse_expression("x3", *c));
    CHECK(parse_expression("2^3", *c).str(names(c)) == "8");
}

TEST_CASE("simplification to canonical form") {
    auto c = chart4();
    RationalFunction f = parse_expression("(x1+x2)^2/(x1*x2) - x1/x2 - x2/x1", *c);
    CHECK(f.str(names(c)) == "2");
}

TEST_CASE("negative exponents fold into the denominator") {
    auto c = chart4();
    CHECK(parse_expression("x1^-2", *c).str(names(c)) == "(1)/(x1^2)");
    CHECK(parse_expression("x1^(-2)", *c).str(names(c)) == "(1)/(x1^2)");
    CHECK(parse_expression("(x1+x2)^-1", *c).str(names(c)) == "(1)/(x1 + x2)");
}

TEST_CASE("print-parse round trip is the identity") {
    auto c = chart4();
    const char* exprs[] = {
        "x2",
        "(x1+x2)^2/(x1*x2)",
        "1/4*(1/x2 + 1/x1)",
        "-(x1 + 2*x2)/(4*x1^2*x2)",
        "(x1^2*x2^2*x3 + x1^2*x2^2*x4 - (x1+x2)*x3^2*x4^2)^2",
    };
    for (const char* e : exprs) {
        RationalFunction f = parse_expression(e, *c);
        RationalFunction g = parse_expression(f.str(names(c)), *c);
        CHECK(f == g);
    }
}

TEST_CASE("errors carry positions") {
    auto c = chart4();
    CHECK_THROWS_AS((void)parse_expression("x1 + ", *c), ParseError);
    CHECK_THROWS_AS((void)parse_expression("y1", *c), ParseError);
    CHECK_THROWS_AS((void)parse_expression("x1 + (x2", *c), ParseError);
    CHECK_THROWS_AS((void)parse_expression("x1/(x2 - x2)", *c), ParseError);
    CHECK_THROWS_AS((void)parse_expression("x1^x2", *c), ParseError);
    try {
        (void)parse_expression("x1 + y9", *c);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
}
