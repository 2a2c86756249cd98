#include "recurv/metric.hpp"

#include <cassert>

namespace recurv {

namespace {

// Fraction-field Gauss-Jordan; returns determinant and writes the inverse.
RationalFunction invert(const std::vector<std::vector<RationalFunction>>& m,
                        std::vector<std::vector<RationalFunction>>& inv, int n, int nv) {
    std::vector<std::vector<RationalFunction>> a = m;
    inv.assign(n, std::vector<RationalFunction>(n, RationalFunction::zero(nv)));
    for (int i = 0; i < n; ++i) inv[i][i] = RationalFunction::one(nv);
    RationalFunction det = RationalFunction::one(nv);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) return RationalFunction::zero(nv);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        det = det * a[col][col];
        RationalFunction p = a[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * p;
            inv[col][j] = inv[col][j] * p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            RationalFunction f = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] = a[row][j] - f * a[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return det;
}

} // namespace

MetricData build_metric(ChartPtr chart, Tensor g) {
    int n = chart->dimension;
    assert(g.rank() == 2);
    if (!g.symmetry_valid() || g.symmetry() != Symmetry::Symmetric2)
        throw TensorShapeError("metric must be a symmetric rank-2 tensor");
    std::vector<std::vector<RationalFunction>> m(
        n, std::vector<RationalFunction>(n, RationalFunction::zero(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = g.at({i, j});
    std::vector<std::vector<RationalFunction>> inv;
    RationalFunction det = invert(m, inv, n, n);
    if (det.is_zero())
        throw DegenerateMetricError("metric determinant is identically zero");
    Tensor g_inv(chart, 2, Symmetry::Symmetric2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g_inv.at({i, j}) = inv[i][j];
    return MetricData{std::move(chart), std::move(g), std::move(g_inv), std::move(det)};
}

} // namespace recurv
