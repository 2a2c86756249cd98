#ifndef RECURV_DETECTORS_HPP
#define RECURV_DETECTORS_HPP

#include <optional>

#include "recurv/curvature.hpp"
#include "recurv/linear_solver.hpp"

namespace recurv {

enum class Verdict { Holds, Fails, Degenerate };
const char* verdict_name(Verdict v);

// Recurrent-like structure kinds. Recurrent covers T-recurrent for any rank;
// GeneralizedRecurrent2 is the rank-2 form nabla Z = Pi Z + Phi g (Ricci
// generalized recurrent for Z = S).
enum class StructureKind {
    Recurrent,
    GeneralizedRecurrent2,
    QuasiGeneralized,
    QuasiGeneralizedLike,
    HyperGeneralized,
    WeaklyGeneralized,
    SuperGeneralized,
};
const char* structure_kind_name(StructureKind k);

struct StructureResult {
    std::string name;
    Verdict verdict = Verdict::Fails;
    SolutionFamily family;
    std::set<std::string> excluded_loci;
    std::string note;
};

// Solves nabla T = sum of 1-form-weighted basis tensors for the kind's basis.
// T defaults to the Riemann tensor; pass C/P/W/K or the Ricci tensor where the
// structure calls for them. QuasiGeneralized kinds need the eta 1-form.
StructureResult detect_structure(StructureKind kind, const Tensor& T,
                                 const CurvatureBundle& b,
                                 const Tensor* eta = nullptr);

struct RoterResult {
    Verdict verdict = Verdict::Fails;
    LinearSolveResult solve;            // unknowns ordered (N1, N2, N3)
    RationalFunction n1, n2, n3;        // particular member
    bool proper = false;                // particular N3 != 0
    bool unique = false;
    std::set<std::string> excluded_loci;

    explicit RoterResult(int nvars) : n1(nvars), n2(nvars), n3(nvars) {}
};

// R = N1 g^g + N2 g^S + N3 S^S as a single global solve.
RoterResult detect_roter(const CurvatureBundle& b);

struct EinsteinClassResult {
    bool einstein = false;       // S = (kappa/n) g exactly
    bool ein2_holds = false;     // monic: S^2 + a2 S + a3 g = 0 solvable
    bool ein2_proper = false;    // ein2 holds and not Einstein
    RationalFunction a2, a3;

    enum class Quasi { Holds, Fails, Undetermined };
    Quasi quasi = Quasi::Fails;
    std::string quasi_note;
    RationalFunction alpha, beta;
    std::vector<RationalFunction> eta;

    EinsteinClassResult(int nvars)
        : a2(nvars), a3(nvars), alpha(nvars), beta(nvars) {}
};

EinsteinClassResult detect_einstein_class(const CurvatureBundle& b);

struct SemisymmetryResult {
    bool semisymmetric = false;  // R.T = 0 exactly
    enum class Pseudo { NotApplicable, Holds, Fails } pseudo = Pseudo::NotApplicable;
    RationalFunction l_t;        // scalar in R.T = L_T Q(g,T) when pseudo holds
    bool q_zero = false;         // Q(g,T) = 0 identically (defining set empty)
    std::string note;

    SemisymmetryResult(int nvars) : l_t(nvars) {}
};

SemisymmetryResult check_semisymmetry(const Tensor& T, const CurvatureBundle& b);

// Precomputed wedge combinations shared by the detectors.
struct DetectorBasis {
    Tensor gg;  // g^g
    Tensor gs;  // g^S
    Tensor ss;  // S^S
};
DetectorBasis detector_basis(const CurvatureBundle& b);

} // namespace recurv

#endif
