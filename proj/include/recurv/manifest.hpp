#ifndef RECURV_MANIFEST_HPP
#define RECURV_MANIFEST_HPP

#include <optional>
#include <string>
#include <vector>

#include "recurv/metric.hpp"

namespace recurv {

// Plain-text metric manifest. Format: bracketed block headers with key/value
// lines; expressions quoted. Off-diagonal metric entries default to 0.
//
//   [chart]
//   dimension = 4
//   coordinates = x1 x2 x3 x4
//   positive = x1 x2 x3 x4
//
//   [metric]
//   g11 = "x2"
//   ...
//
//   [extras]            # optional
//   eta1 = "1"
//   point = 1 1 1 1
struct Manifest {
    std::string name; // optional, from `name = ...` in [chart]
    ChartPtr chart;
    std::vector<std::string> metric_exprs;            // n*n, row-major source text
    std::vector<std::string> eta_exprs;               // empty or n entries
    std::vector<std::vector<Rational>> sample_points; // optional

    Tensor metric_tensor() const;                     // parsed, validated
    std::optional<Tensor> eta_form() const;
};

Manifest parse_manifest(const std::string& text, const std::string& filename = "<string>");
Manifest load_manifest(const std::string& path);
std::string print_manifest(const Manifest& m);

bool operator==(const Manifest& a, const Manifest& b);

} // namespace recurv

#endif
