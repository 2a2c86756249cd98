#ifndef RECURV_METRIC_HPP
#define RECURV_METRIC_HPP

#include "recurv/tensor.hpp"

namespace recurv {

struct MetricData {
    ChartPtr chart;
    Tensor g;               // covariant components, Symmetric2
    Tensor g_inv;           // contravariant components, Symmetric2
    RationalFunction det;   // symbolic determinant; det = 0 is an excluded locus
};

// Computes the exact inverse and determinant; throws DegenerateMetricError if
// the symbolic determinant is identically zero.
MetricData build_metric(ChartPtr chart, Tensor g);

} // namespace recurv

#endif
