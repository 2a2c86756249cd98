#include <doctest.h>

#include "recurv/corpus.hpp"
#include "recurv/curvature.hpp"
#include "recurv/expr.hpp"
#include "recurv/golden.hpp"
#include "recurv/numeric_check.hpp"

using namespace recurv;

namespace {

CurvatureBundle bundle_for(const std::string& corpus_name, bool flip = false) {
    Manifest m = corpus_manifest(corpus_name);
    return compute_curvature(build_metric(m.chart, m.metric_tensor()), flip);
}

RationalFunction rf(const ChartPtr& c, const std::string& e) {
    return parse_expression(e, *c);
}

} // namespace

TEST_CASE("metric build: inverse, determinant, degenerate input") {
    CurvatureBundle b = bundle_for("paper_example");
    const ChartPtr& c = b.chart();
    CHECK(b.g_inv().at({0, 0}) == rf(c, "1/x2"));
    CHECK(b.g_inv().at({1, 1}) == rf(c, "1/x1"));
    CHECK(b.g_inv().at({2, 2}) == rf(c, "1/x4"));
    CHECK(b.g_inv().at({3, 3}) == rf(c, "1/x3"));
    CHECK(b.metric.det == rf(c, "x1*x2*x3*x4"));

    CurvatureBundle f = bundle_for("flat_r4");
    CHECK(f.g_inv() == f.g());

    auto chart = Chart::standard(4);
    Tensor bad(chart, 2, Symmetry::Symmetric2);
    bad.at({0, 0}) = RationalFunction::variable(4, 0);
    bad.at({1, 1}) = RationalFunction::variable(4, 0);
    bad.at({2, 2}) = RationalFunction::variable(4, 0);
    CHECK_THROWS_AS(build_metric(chart, bad), DegenerateMetricError);
}

TEST_CASE("christoffel symbols: flat and golden") {
    CurvatureBundle f = bundle_for("flat_r4");
    bool all_zero = true;
    for (const auto& g : f.gamma) all_zero = all_zero && g.is_zero();
    CHECK(all_zero);

    CurvatureBundle b = bundle_for("paper_example");
    const ChartPtr& c = b.chart();
    int n = 4;
    auto gid = [n](int h, int i, int j) { return (h * n + i) * n + j; };
    CHECK(b.gamma[gid(0, 0, 1)] == rf(c, "1/(2*x2)"));
    CHECK(b.gamma[gid(0, 1, 1)] == rf(c, "-1/(2*x2)"));
    CHECK(b.gamma[gid(1, 0, 0)] == rf(c, "-1/(2*x1)"));
    std::vector<Rational> ones(4, Rational(1));
    CHECK(b.gamma[gid(0, 0, 1)].evaluate(ones) == make_rational(1, 2));
}

TEST_CASE("riemann golden values pin the sign convention") {
    CurvatureBundle b = bundle_for("paper_example");
    const ChartPtr& c = b.chart();
    CHECK(b.riemann.at({0, 1, 0, 1}) == rf(c, "1/4*(1/x2 + 1/x1)"));
    CHECK(b.riemann.at({2, 3, 2, 3}) == rf(c, "1/4*(1/x4 + 1/x3)"));
    // all components not forced by the two independent ones vanish
    Tensor expected(c, 4, Symmetry::CurvatureType4);
    auto set_block = [&](int h, int i, const RationalFunction& v) {
        expected.at({h, i, h, i}) = v;
        expected.at({i, h, i, h}) = v;
        expected.at({h, i, i, h}) = -v;
        expected.at({i, h, h, i}) = -v;
    };
    set_block(0, 1, rf(c, "1/4*(1/x2 + 1/x1)"));
    set_block(2, 3, rf(c, "1/4*(1/x4 + 1/x3)"));
    CHECK(b.riemann == expected);

    CHECK(bundle_for("flat_r4").riemann.is_zero());

    // the flipped convention must miss the golden value
    CurvatureBundle flipped = bundle_for("paper_example", true);
    CHECK(flipped.riemann.at({0, 1, 0, 1}) == rf(c, "-1/4*(1/x2 + 1/x1)"));
}

TEST_CASE("ricci and scalar golden values") {
    CurvatureBundle b = bundle_for("paper_example");
    const ChartPtr& c = b.chart();
    for (const auto& comp : golden::ricci())
        CHECK(b.ricci.at({comp.idx[0] - 1, comp.idx[1] - 1}) == rf(c, comp.expr));
    CHECK(b.ricci.at({0, 1}).is_zero());
    CHECK(b.scalar ==
          rf(c, "-(x1+x2)/(2*x1^2*x2^2) - (x3+x4)/(2*x3^2*x4^2)"));
    std::vector<Rational> ones(4, Rational(1));
    CHECK(b.scalar.evaluate(ones) == make_rational(-2));

    CurvatureBundle f = bundle_for("flat_r4");
    CHECK(f.ricci.is_zero());
    CHECK(f.scalar.is_zero());
}

TEST_CASE("covariant derivative golden values and metric compatibility") {
    CurvatureBundle b = bundle_for("paper_example");
    const ChartPtr& c = b.chart();
    for (const auto& comp : golden::nabla_riemann())
        CHECK(b.nabla_r.at({comp.idx[0] - 1, comp.idx[1] - 1, comp.idx[2] - 1,
                            comp.idx[3] - 1, comp.idx[4] - 1}) == rf(c, comp.expr));
    CHECK(covariant_derivative(b.g(), b.gamma).is_zero());
    CHECK(covariant_derivative(bundle_for("flat_r4").g(), bundle_for("flat_r4").gamma)
              .is_zero());
}

TEST_CASE("nabla S decomposes over S and g with the golden 1-forms") {
    CurvatureBundle b = bundle_for("paper_example");
    const ChartPtr& c = b.chart();
    auto pis = golden::pi_bar();
    auto phis = golden::phi_bar();
    bool ok = true;
    for (int l = 0; l < 4 && ok; ++l) {
        RationalFunction pibar = rf(c, pis[l]);
        RationalFunction phibar = rf(c, phis[l]);
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j)
                ok = (b.nabla_s.at({i, j, l}) - pibar * b.ricci.at({i, j}) -
                      phibar * b.g().at({i, j}))
                         .is_zero();
    }
    CHECK(ok);
}

TEST_CASE("bianchi identities on the corpus") {
    for (const char* name : {"paper_example", "flat_r4", "random_poly_n3"}) {
        CurvatureBundle b = bundle_for(name);
        int n = b.dim();
        bool first = true, second = true;
        for (int h = 0; h < n; ++h)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        first = first && (b.riemann.at({h, i, j, k}) +
                                          b.riemann.at({i, j, h, k}) +
                                          b.riemann.at({j, h, i, k}))
                                             .is_zero();
                        for (int l = 0; l < n && second; ++l)
                            second = (b.nabla_r.at({h, i, j, k, l}) +
                                      b.nabla_r.at({i, l, j, k, h}) +
                                      b.nabla_r.at({l, h, j, k, i}))
                                         .is_zero();
                    }
        CHECK(first);
        CHECK(second);
        CHECK(b.riemann.symmetry_valid());
    }
}

TEST_CASE("derived tensors") {
    CurvatureBundle f = bundle_for("flat_r4");
    for (DerivedKind kind : {DerivedKind::Conformal, DerivedKind::Projective,
                             DerivedKind::Concircular, DerivedKind::Conharmonic})
        CHECK(derived_tensor(kind, f).is_zero());

    CurvatureBundle b = bundle_for("paper_example");
    Tensor C = derived_tensor(DerivedKind::Conformal, b);
    CHECK(contract(C, 0, 3, b.g_inv()).is_zero());

    // W = R - kappa/(2n(n-1)) g^g, checked from independently assembled parts
    Tensor W = derived_tensor(DerivedKind::Concircular, b);
    Tensor gg = kulkarni_nomizu(b.g(), b.g());
    RationalFunction w_coeff = b.scalar.scaled(make_rational(1, 24));
    CHECK(W.at({0, 1, 0, 1}) ==
          b.riemann.at({0, 1, 0, 1}) - w_coeff * gg.at({0, 1, 0, 1}));

    // C = K + kappa/(2(n-1)(n-2)) g^g
    Tensor K = derived_tensor(DerivedKind::Conharmonic, b);
    CHECK((C - K - gg.scaled(b.scalar.scaled(make_rational(1, 12)))).is_zero());
}

TEST_CASE("numeric oracle agrees with exact curvature") {
    for (const char* name : {"paper_example", "flat_r4", "random_poly_n3"}) {
        CurvatureBundle b = bundle_for(name);
        auto pts = sample_points(b, 5, 31);
        REQUIRE(pts.size() == 5);
        CrosscheckSummary cs = numeric_crosscheck(b, pts);
        CHECK(cs.ok);
        CHECK(cs.points_tested == 5);
    }
}
