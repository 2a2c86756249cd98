#ifndef RECURV_REPORT_HPP
#define RECURV_REPORT_HPP

#include <json.hpp>

#include "recurv/detectors.hpp"
#include "recurv/manifest.hpp"
#include "recurv/numeric_check.hpp"
#include "recurv/theorems.hpp"

namespace recurv {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
    std::set<std::string> structures; // empty = all; tokens: k sk gk2 sgk hgk wgk qgk qgklike roter einstein semisym
    char tensor = 'r';                // r|c|p|w|k: T for the family detectors
    bool run_theorems = true;
    bool numeric = true;
    int numeric_points = 5;
    unsigned numeric_seed = 1234;
};

// Runs the curvature engine and the selected detectors; deterministic output.
Json analyze(const Manifest& manifest, const AnalyzeOptions& opts = {});

// Invariant battery: symmetry/Bianchi/compatibility identities, wedge-product
// derivation rules on a pseudo-random symmetric tensor, golden component
// tables when the metric is the bundled example, and the numeric oracle.
struct VerifyOutcome {
    std::vector<NamedCheck> checks;
    bool all_pass = true;
};
VerifyOutcome verify_suite(const Manifest& manifest, bool flip_riemann_sign = false);

// Exact component evaluation for the CLI `eval` subcommand.
Json eval_point(const Manifest& manifest, const std::string& tensor_name,
                const std::vector<Rational>& point);

// Shared by analyze and the CLI: canonical string of a rational function on
// the manifest chart.
std::string rf_str(const RationalFunction& f, const ChartPtr& chart);

} // namespace recurv

#endif
