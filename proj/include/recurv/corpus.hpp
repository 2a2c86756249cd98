#ifndef RECURV_CORPUS_HPP
#define RECURV_CORPUS_HPP

#include "recurv/manifest.hpp"

namespace recurv {

// Built-in example metrics: the product metric whose curvature objects have
// closed-form golden values, the flat metric, a constant-curvature conformal
// metric, and seeded random polynomial metrics in dimensions 3 and 4.
std::vector<std::string> corpus_names();
std::string corpus_text(const std::string& name); // throws ManifestError
Manifest corpus_manifest(const std::string& name);

// Deterministic diagonal-dominant polynomial metric manifest.
std::string random_polynomial_manifest_text(int dimension, unsigned seed);

} // namespace recurv

#endif
