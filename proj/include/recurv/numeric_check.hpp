#ifndef RECURV_NUMERIC_CHECK_HPP
#define RECURV_NUMERIC_CHECK_HPP

#include "recurv/curvature.hpp"
#include "recurv/manifest.hpp"

namespace recurv {

struct CrosscheckSummary {
    int points_tested = 0;
    double max_rel_error = 0.0;
    double tolerance = 1e-6;
    bool ok = true;
    std::vector<std::string> failures;
};

// Rebuilds Gamma, R, S at each point with central finite differences on
// floating-point metric evaluation only, and compares against the exact
// values. Relative error uses an absolute floor of 1 for near-zero targets.
CrosscheckSummary numeric_crosscheck(const CurvatureBundle& b,
                                     const std::vector<std::vector<Rational>>& points,
                                     double step = 1e-4, double tol = 1e-6);

// Deterministic pole-free rational sample points for the bundle (positive
// coordinates where the chart assumes positivity).
std::vector<std::vector<Rational>> sample_points(const CurvatureBundle& b, int count,
                                                 unsigned seed);

} // namespace recurv

#endif
