#ifndef RECURV_CURVATURE_HPP
#define RECURV_CURVATURE_HPP

#include "recurv/metric.hpp"
#include "recurv/tensor_ops.hpp"

namespace recurv {

// Christoffel symbols of the second kind, Gamma^h_{ij}, flat index h*n*n+i*n+j.
using Christoffel = std::vector<RationalFunction>;

Christoffel christoffel(const MetricData& m);

// Covariant derivative of a (0,k) tensor; the derivative slot is appended
// last, matching the comma convention T_{i1..ik,l}.
Tensor covariant_derivative(const Tensor& T, const Christoffel& gamma);

// Everything the structure detectors consume, derived once from the metric.
struct CurvatureBundle {
    MetricData metric;
    Christoffel gamma;
    Tensor riemann;          // (0,4), curvature-type symmetries
    Tensor ricci;            // (0,2) symmetric
    RationalFunction scalar; // kappa
    Tensor ricci_sq;         // second-level Ricci tensor
    RationalFunction scalar2; // kappa^(2) = trace of the second-level Ricci
    Tensor nabla_r;          // (0,5)
    Tensor nabla_s;          // (0,3)
    Tensor dscalar;          // 1-form d(kappa)

    int dim() const { return metric.chart->dimension; }
    const ChartPtr& chart() const { return metric.chart; }
    const Tensor& g() const { return metric.g; }
    const Tensor& g_inv() const { return metric.g_inv; }
};

// The Riemann sign convention is pinned by the golden example values
// (R_{1212} > 0 on the positive orthant for the product metric the test corpus
// carries); flip_sign exists as a negative control for the verify suite.
CurvatureBundle compute_curvature(MetricData m, bool flip_riemann_sign = false);

enum class DerivedKind { Conformal, Projective, Concircular, Conharmonic };

// Conformal C, projective P, concircular W, conharmonic K. P is only
// pair-asymmetric and is tagged General.
Tensor derived_tensor(DerivedKind kind, const CurvatureBundle& b);

const char* derived_kind_name(DerivedKind kind);

} // namespace recurv

#endif
