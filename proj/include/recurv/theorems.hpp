#ifndef RECURV_THEOREMS_HPP
#define RECURV_THEOREMS_HPP

#include "recurv/detectors.hpp"

namespace recurv {

struct NamedCheck {
    std::string name;
    bool pass = false;
    bool exercised = true; // false when the hypothesis does not hold on the input
    std::string note;
};

// One member of a super-generalized family: the four associated 1-forms in
// basis order (T, S^S, g^S, g^g).
struct SgkForms {
    Tensor pi, phi, psi, theta;
    SgkForms(ChartPtr c)
        : pi(c, 1, Symmetry::OneForm), phi(c, 1, Symmetry::OneForm),
          psi(c, 1, Symmetry::OneForm), theta(c, 1, Symmetry::OneForm) {}
};

struct Gk2Forms {
    Tensor pibar, phibar;
    Gk2Forms(ChartPtr c)
        : pibar(c, 1, Symmetry::OneForm), phibar(c, 1, Symmetry::OneForm) {}
};

SgkForms sgk_member(const SolutionFamily& fam, ChartPtr chart,
                    const std::vector<std::vector<Rational>>& params = {});
Gk2Forms gk2_member(const SolutionFamily& fam, ChartPtr chart);

// Exact check of nabla T = Pi(x)T + Phi(x)S^S + Psi(x)g^S + Theta(x)g^g.
bool sgk_equation_holds(const Tensor& T, const Tensor& nabla_t, const SgkForms& f,
                        const DetectorBasis& basis);

// The contraction identity of the super-generalized condition, the d(kappa)
// dependency relation, and the two Bianchi-contraction identities. All must
// hold exactly for every member of a consistent family.
std::vector<NamedCheck> verify_sgk_identities(const SgkForms& f, const CurvatureBundle& b);

// Assembles the curvature commutator R.R from the family 1-forms (exterior
// derivatives and wedges only) in the orientation of curvature_action.
Tensor assemble_rdotr_from_forms(const SgkForms& f, const CurvatureBundle& b,
                                 const DetectorBasis& basis);

NamedCheck verify_rdotr_expansion(const SgkForms& f, const CurvatureBundle& b,
                                  const DetectorBasis& basis, const Tensor& rdotr);

struct SufficiencyReport {
    bool applicable = false;     // family member available
    bool all_closed = false;
    bool pairwise_codirectional = false;
    bool condition_met = false;
    bool rr_zero_verified = false;
    std::string note;
};

SufficiencyReport check_semisymmetry_sufficiency(const SgkForms& f,
                                                 const CurvatureBundle& b,
                                                 const Tensor& rdotr);

struct TransferResult {
    DerivedKind kind;
    bool applicable = false;
    bool verified = false;
    SgkForms transferred;
    std::string note;
    TransferResult(DerivedKind k, ChartPtr c) : kind(k), transferred(c) {}
};

// Theorem: a manifold that is both Ricci generalized recurrent and super
// generalized recurrent carries transferred families for C, P, W, K.
TransferResult transfer_sgk(DerivedKind kind, const SgkForms& sgk, const Gk2Forms& gk2,
                            const CurvatureBundle& b, const DetectorBasis& basis);

// Same-1-form equivalences: T-structure with identical (Pi,Phi,Psi,Theta) iff
// Ricci recurrent with Pi (C, P, K) or d(kappa) = kappa Pi (W); plus the
// (T - R) recurrence criterion.
std::vector<NamedCheck> same_form_equivalences(const SgkForms& f, const CurvatureBundle& b,
                                               const DetectorBasis& basis);

// Conditional specialization theorems, checked only where hypotheses hold:
// Einstein reduction, quasi-Einstein reduction, the Ricci-generalized
// equivalence on proper Roter manifolds, and the Phi = 0 / Ein(2) dichotomy.
std::vector<NamedCheck> verify_specialization_theorems(
    const CurvatureBundle& b, const StructureResult& sgk, const StructureResult& gk2,
    const RoterResult& roter, const EinsteinClassResult& einstein,
    const Tensor* eta);

} // namespace recurv

#endif
