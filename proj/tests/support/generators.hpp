#ifndef RECURV_TESTS_GENERATORS_HPP
#define RECURV_TESTS_GENERATORS_HPP

#include <random>

#include "recurv/polynomial.hpp"
#include "recurv/rational_function.hpp"
#include "recurv/tensor.hpp"

namespace recurv::testing {

// Deterministic small polynomials for property tests.
inline Polynomial random_polynomial(std::mt19937& rng, int nvars, int max_degree = 2,
                                    int max_terms = 4, int coeff_bound = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> expo(0, max_degree);
    Polynomial p(nvars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Exponents e(nvars, 0);
        int budget = max_degree;
        for (int v = 0; v < nvars; ++v) {
            int k = std::min(expo(rng), budget);
            e[v] = static_cast<std::uint32_t>(k);
            budget -= k;
        }
        p += Polynomial::monomial(nvars, e, make_rational(coeff(rng)));
    }
    return p;
}

inline Polynomial random_nonzero_polynomial(std::mt19937& rng, int nvars,
                                            int max_degree = 2, int max_terms = 4) {
    for (;;) {
        Polynomial p = random_polynomial(rng, nvars, max_degree, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction random_rational_function(std::mt19937& rng, int nvars,
                                                 int max_degree = 2) {
    return RationalFunction(random_polynomial(rng, nvars, max_degree),
                            random_nonzero_polynomial(rng, nvars, max_degree));
}

inline std::vector<Rational> random_point(std::mt19937& rng, int nvars, int lo = 1,
                                          int hi = 7) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> p;
    for (int i = 0; i < nvars; ++i) p.push_back(make_rational(num(rng), den(rng)));
    return p;
}

// Random symmetric rank-2 tensor with polynomial entries.
inline Tensor random_symmetric2(std::mt19937& rng, const ChartPtr& chart,
                                int max_degree = 2) {
    int n = chart->dimension;
    Tensor t(chart, 2, Symmetry::Symmetric2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            RationalFunction v(random_polynomial(rng, n, max_degree, 3));
            t.at({i, j}) = v;
            t.at({j, i}) = v;
        }
    return t;
}

} // namespace recurv::testing

#endif
