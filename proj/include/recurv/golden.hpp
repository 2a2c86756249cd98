#ifndef RECURV_GOLDEN_HPP
#define RECURV_GOLDEN_HPP

#include <array>
#include <string>
#include <vector>

#include "recurv/curvature.hpp"

namespace recurv {

// Closed-form component tables for the bundled product metric
// diag(x2, x1, x4, x3) on the positive orthant. Expressions are in the
// manifest grammar; indices are 1-based.
namespace golden {

struct Component4 {
    std::array<int, 4> idx;
    std::string expr;
};
struct Component2 {
    std::array<int, 2> idx;
    std::string expr;
};
struct Component5 {
    std::array<int, 5> idx; // last entry is the derivative direction
    std::string expr;
};

// Nonzero components up to symmetry.
std::vector<Component4> riemann();
std::vector<Component2> ricci();
std::vector<Component5> nabla_riemann();
std::vector<Component4> g_wedge_g();
std::vector<Component4> g_wedge_s();
std::vector<Component4> s_wedge_s();

// Roter coefficients.
std::string n1();
std::string n2();
std::string n3();

// Ricci generalized recurrent 1-forms, one expression per direction (1..4).
std::vector<std::string> pi_bar();
std::vector<std::string> phi_bar();

// Super generalized recurrent family: 1-form components as functions of the
// free Theta components (expression strings substituted verbatim).
std::vector<std::string> pi_forms(const std::array<std::string, 4>& theta);
std::vector<std::string> phi_forms(const std::array<std::string, 4>& theta);
std::vector<std::string> psi_forms(const std::array<std::string, 4>& theta);

// True when the bundle's metric equals the golden example metric.
bool is_golden_metric(const CurvatureBundle& b);

} // namespace golden
} // namespace recurv

#endif
