#include "recurv/corpus.hpp"

#include <sstream>

namespace recurv {

namespace {

const char* kPaperExample = R"([chart]
name = paper_example
dimension = 4
coordinates = x1 x2 x3 x4
positive = x1 x2 x3 x4

[metric]
g11 = "x2"
g22 = "x1"
g33 = "x4"
g44 = "x3"

[extras]
point = 1 1 1 1
point = 1 2 3 4
)";

const char* kFlatR4 = R"([chart]
name = flat_r4
dimension = 4
coordinates = x1 x2 x3 x4

[metric]
g11 = "1"
g22 = "1"
g33 = "1"
g44 = "1"
)";

const char* kConformalR4 = R"([chart]
name = conformal_r4
dimension = 4
coordinates = x1 x2 x3 x4

[metric]
g11 = "1/(1 + (x1^2 + x2^2 + x3^2 + x4^2)/4)^2"
g22 = "1/(1 + (x1^2 + x2^2 + x3^2 + x4^2)/4)^2"
g33 = "1/(1 + (x1^2 + x2^2 + x3^2 + x4^2)/4)^2"
g44 = "1/(1 + (x1^2 + x2^2 + x3^2 + x4^2)/4)^2"
)";

// Small deterministic generator, stable across platforms.
struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned seed) : s(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    unsigned next(unsigned bound) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<unsigned>((s >> 33) % bound);
    }
};

} // namespace

std::string random_polynomial_manifest_text(int dimension, unsigned seed) {
    Lcg rng(seed);
    std::ostringstream os;
    os << "[chart]\n";
    os << "name = random_poly_n" << dimension << "\n";
    os << "dimension = " << dimension << "\n";
    os << "coordinates =";
    for (int i = 1; i <= dimension; ++i) os << " x" << i;
    os << "\n\n[metric]\n";
    // Diagonal-dominant: constant + square terms on the diagonal, at most two
    // small linear off-diagonal entries.
    for (int i = 1; i <= dimension; ++i) {
        unsigned c = 2 + rng.next(3);
        unsigned a = 1 + rng.next(static_cast<unsigned>(dimension));
        unsigned b = 1 + rng.next(static_cast<unsigned>(dimension));
        os << "g" << i << i << " = \"" << c << " + x" << a << "^2";
        if (rng.next(2)) os << " + x" << b << "^2";
        os << "\"\n";
    }
    int placed = 0;
    for (int i = 1; i <= dimension && placed < 2; ++i)
        for (int j = i + 1; j <= dimension && placed < 2; ++j) {
            if (rng.next(3) != 0) continue;
            unsigned a = 1 + rng.next(static_cast<unsigned>(dimension));
            os << "g" << i << j << " = \"x" << a << "\"\n";
            ++placed;
        }
    return os.str();
}

std::vector<std::string> corpus_names() {
    return {"paper_example", "flat_r4", "conformal_r4", "random_poly_n3", "random_poly_n4"};
}

std::string corpus_text(const std::string& name) {
    if (name == "paper_example") return kPaperExample;
    if (name == "flat_r4") return kFlatR4;
    if (name == "conformal_r4") return kConformalR4;
    if (name == "random_poly_n3") return random_polynomial_manifest_text(3, 7);
    if (name == "random_poly_n4") return random_polynomial_manifest_text(4, 11);
    throw ManifestError("unknown corpus entry '" + name + "'");
}

Manifest corpus_manifest(const std::string& name) {
    return parse_manifest(corpus_text(name), "corpus:" + name);
}

} // namespace recurv
