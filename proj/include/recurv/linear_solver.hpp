#ifndef RECURV_LINEAR_SOLVER_HPP
#define RECURV_LINEAR_SOLVER_HPP

#include <set>
#include <string>
#include <vector>

#include "recurv/tensor.hpp"

namespace recurv {

// One linear system over the rational-function field.
struct LinearSolveResult {
    enum class Status { Unique, Affine, Inconsistent };
    Status status = Status::Inconsistent;
    std::vector<RationalFunction> particular;            // per unknown
    std::vector<std::vector<RationalFunction>> null_basis; // each vector per unknown
    std::set<std::string> pivot_loci; // canonical strings of pivot numerators/denominators

    bool consistent() const { return status != Status::Inconsistent; }
};

// Exact Gaussian elimination, deterministic pivoting (first nonzero entry in
// row order). Rows are (coefficients, rhs).
LinearSolveResult solve_linear_system(
    const std::vector<std::vector<RationalFunction>>& coeffs,
    const std::vector<RationalFunction>& rhs, int nvars,
    std::span<const std::string> names);

// Status of one direction slot of a structure equation.
struct DirectionSolution {
    enum class Status { Unique, Affine, Inconsistent, DegenerateLhs };
    Status status = Status::Inconsistent;
    std::vector<RationalFunction> particular;
    std::vector<std::vector<RationalFunction>> null_basis;
    std::set<std::string> pivot_loci;

    bool consistent() const { return status != Status::Inconsistent; }
};

// Affine solution set of 1-form coefficients, one block per coordinate
// direction, for  sum_b c_{b,l} basis_b = lhs(.,l).
struct SolutionFamily {
    std::vector<std::string> basis_names;
    std::vector<DirectionSolution> directions;

    bool all_consistent() const;
    bool any_inconsistent() const;
    bool lhs_identically_zero() const; // every direction DegenerateLhs
    // Coefficients of the member with the free parameters of direction l set
    // to params[l] (rational functions); defaults to the particular solution.
    std::vector<Tensor> member_forms(ChartPtr chart) const;
    std::vector<Tensor> member_forms(
        ChartPtr chart, const std::vector<std::vector<RationalFunction>>& params) const;
};

// Solves the per-direction family for lhs of rank k+1 (derivative slot last)
// against rank-k basis tensors; re-substitutes the particular solution before
// returning. Throws std::logic_error if re-substitution fails.
SolutionFamily solve_linear_family(const Tensor& lhs,
                                   const std::vector<const Tensor*>& basis,
                                   const std::vector<std::string>& basis_names);

} // namespace recurv

#endif
