#include "recurv/golden.hpp"

#include "recurv/expr.hpp"

namespace recurv::golden {

namespace {
// Shared subexpressions of the example's 1-form families:
// kQ - kW = -2(x1+x2) x3^2 x4^2 and kQ * kW = kD, the chart's open-set bound.
const char* kQ = "(x1^2*x2^2*x3 + x1^2*x2^2*x4 - (x1+x2)*x3^2*x4^2)";
const char* kW = "(x1^2*x2^2*(x3+x4) + x2*x3^2*x4^2 + x1*x3^2*x4^2)";
const char* kD =
    "(x1^4*x2^4*x3^2 + x1^4*x2^4*x4^2 + 2*x1^4*x2^4*x3*x4 - (x1+x2)^2*x3^4*x4^4)";
} // namespace

std::vector<Component4> riemann() {
    return {
        {{1, 2, 1, 2}, "1/4*(1/x2 + 1/x1)"},
        {{3, 4, 3, 4}, "1/4*(1/x4 + 1/x3)"},
    };
}

std::vector<Component2> ricci() {
    return {
        {{1, 1}, "-(x1/x2 + 1)/(4*x1^2)"},
        {{2, 2}, "-(x2/x1 + 1)/(4*x2^2)"},
        {{3, 3}, "-(x3/x4 + 1)/(4*x3^2)"},
        {{4, 4}, "-(x4/x3 + 1)/(4*x4^2)"},
    };
}

std::vector<Component5> nabla_riemann() {
    return {
        {{1, 2, 1, 2, 1}, "-(x1/x2 + 2)/(4*x1^2)"},
        {{1, 2, 1, 2, 2}, "-(x2/x1 + 2)/(4*x2^2)"},
        {{3, 4, 3, 4, 3}, "-(x3/x4 + 2)/(4*x3^2)"},
        {{3, 4, 3, 4, 4}, "-(x4/x3 + 2)/(4*x4^2)"},
    };
}

std::vector<Component4> g_wedge_g() {
    return {
        {{1, 2, 1, 2}, "-2*x1*x2"}, {{1, 3, 1, 3}, "-2*x2*x4"},
        {{1, 4, 1, 4}, "-2*x2*x3"}, {{2, 3, 2, 3}, "-2*x1*x4"},
        {{2, 4, 2, 4}, "-2*x1*x3"}, {{3, 4, 3, 4}, "-2*x3*x4"},
    };
}

std::vector<Component4> g_wedge_s() {
    return {
        {{1, 2, 1, 2}, "1/2*(1/x2 + 1/x1)"},
        {{1, 3, 1, 3}, "((x1+x2)*x4)/(4*x1^2*x2) + (x2*(x3+x4))/(4*x3^2*x4)"},
        {{1, 4, 1, 4}, "((x1+x2)*x3)/(4*x1^2*x2) + (x2*(x3+x4))/(4*x4^2*x3)"},
        {{2, 3, 2, 3}, "((x1+x2)*x4)/(4*x1*x2^2) + (x1*(x3+x4))/(4*x3^2*x4)"},
        {{2, 4, 2, 4}, "((x1+x2)*x3)/(4*x1*x2^2) + (x1*(x3+x4))/(4*x4^2*x3)"},
        {{3, 4, 3, 4}, "1/2*(1/x4 + 1/x3)"},
    };
}

std::vector<Component4> s_wedge_s() {
    return {
        {{1, 2, 1, 2}, "-(x1+x2)^2/(8*x1^3*x2^3)"},
        {{1, 3, 1, 3}, "-((x1+x2)*(x3+x4))/(8*x1^2*x2*x3^2*x4)"},
        {{1, 4, 1, 4}, "-((x1+x2)*(x3+x4))/(8*x1^2*x2*x3*x4^2)"},
        {{2, 3, 2, 3}, "-((x1+x2)*(x3+x4))/(8*x1*x2^2*x3^2*x4)"},
        {{2, 4, 2, 4}, "-((x1+x2)*(x3+x4))/(8*x1*x2^2*x3*x4^2)"},
        {{3, 4, 3, 4}, "-(x3+x4)^2/(8*x3^3*x4^3)"},
    };
}

std::string n1() {
    return std::string("-((x1+x2)*(x3+x4)*") + kW +
           ")/(8*(-(x1^2*x2^2*(x3+x4)) + x3^2*x4^2*(x1+x2))^2)";
}

std::string n2() {
    return "-(2*x1^2*x2^2*(x1+x2)*x3^2*x4^2*(x3+x4))"
           "/((-(x1^2*x2^2*(x3+x4)) + x3^2*x4^2*(x1+x2))^2)";
}

std::string n3() {
    return std::string("-(2*x1^2*x2^2*x3^2*x4^2*") + kW +
           ")/((-(x1^2*x2^2*(x3+x4)) + x3^2*x4^2*(x1+x2))^2)";
}

std::vector<std::string> pi_bar() {
    return {
        "((x1+2*x2)*x3^2*x4^2)/(x2^2*x3*x1^3 + x2^2*x4*x1^3 - (x1+x2)*x3^2*x4^2*x1)",
        "((2*x1+x2)*x3^2*x4^2)/(x1^2*x3*x2^3 + x1^2*x4*x2^3 - (x1+x2)*x3^2*x4^2*x2)",
        "(x1^2*x2^2*(x3+2*x4))/(x3*(-(x1^2*(x3+x4)*x2^2) + x3^2*x4^2*x2 + x1*x3^2*x4^2))",
        "(x1^2*x2^2*(2*x3+x4))/(x4*(-(x1^2*(x3+x4)*x2^2) + x3^2*x4^2*x2 + x1*x3^2*x4^2))",
    };
}

std::vector<std::string> phi_bar() {
    return {
        "((x1+2*x2)*(x3+x4))/(4*x2^2*x3*x1^3 + 4*x2^2*x4*x1^3 - 4*(x1+x2)*x3^2*x4^2*x1)",
        "((2*x1+x2)*(x3+x4))/(4*x1^2*x3*x2^3 + 4*x1^2*x4*x2^3 - 4*(x1+x2)*x3^2*x4^2*x2)",
        "((x1+x2)*(x3+2*x4))/(4*x3*(-(x1^2*(x3+x4)*x2^2) + x3^2*x4^2*x2 + x1*x3^2*x4^2))",
        "((x1+x2)*(2*x3+x4))/(4*x4*(-(x1^2*(x3+x4)*x2^2) + x3^2*x4^2*x2 + x1*x3^2*x4^2))",
    };
}

std::vector<std::string> pi_forms(const std::array<std::string, 4>& th) {
    std::string denom = std::string("((x1+x2)*(x3+x4)*") + kW + ")";
    return {
        "(8*(" + th[0] + ")*" + kQ + "^2 - x1*x2^2*(x1+2*x2)*(x3+x4)^2)/" + denom,
        "(8*(" + th[1] + ")*" + kQ + "^2 - x1^2*x2*(2*x1+x2)*(x3+x4)^2)/" + denom,
        "(8*(" + th[2] + ")*" + kQ + "^2 - (x1+x2)^2*x3*x4^2*(x3+2*x4))/" + denom,
        "(8*(" + th[3] + ")*" + kQ + "^2 - (x1+x2)^2*x3^2*x4*(2*x3+x4))/" + denom,
    };
}

std::vector<std::string> phi_forms(const std::array<std::string, 4>& th) {
    return {
        "2*x1*x2^2*x3^2*x4^2*(8*(" + th[0] + ")*x1/(x3+x4) - (x1+2*x2)/" + kQ +
            ")/(x1+x2)",
        "2*x1^2*x2*x3^2*x4^2*(8*(" + th[1] + ")*x2/(x3+x4) - (2*x1+x2)/" + kQ +
            ")/(x1+x2)",
        "2*x1^2*x2^2*x3*x4^2*(8*(" + th[2] + ")*x3/(x1+x2) + (x3+2*x4)/" + kQ +
            ")/(x3+x4)",
        "2*x1^2*x2^2*x3^2*x4*(8*(" + th[3] + ")*x4/(x1+x2) + (2*x3+x4)/" + kQ +
            ")/(x3+x4)",
    };
}

std::vector<std::string> psi_forms(const std::array<std::string, 4>& th) {
    return {
        "x1*(x2*x3*x4)^2*(16*(" + th[0] + ")*x1*" + kQ +
            " - (x1+2*x2)*(x3+x4))/" + kD,
        "x2*(x1*x3*x4)^2*(16*(" + th[1] + ")*x2*" + kQ +
            " - (2*x1+x2)*(x3+x4))/" + kD,
        "x3*(x1*x2*x4)^2*(16*(" + th[2] + ")*x3*" + kQ +
            " + (x1+x2)*(x3+2*x4))/" + kD,
        "x4*(x1*x2*x3)^2*(16*(" + th[3] + ")*x4*" + kQ +
            " + (x1+x2)*(2*x3+x4))/" + kD,
    };
}

bool is_golden_metric(const CurvatureBundle& b) {
    if (b.dim() != 4) return false;
    const Chart& c = *b.chart();
    if (c.coordinates != std::vector<std::string>{"x1", "x2", "x3", "x4"}) return false;
    Tensor expected(b.chart(), 2, Symmetry::Symmetric2);
    expected.at({0, 0}) = parse_expression("x2", c);
    expected.at({1, 1}) = parse_expression("x1", c);
    expected.at({2, 2}) = parse_expression("x4", c);
    expected.at({3, 3}) = parse_expression("x3", c);
    return b.g() == expected;
}

} // namespace recurv::golden
