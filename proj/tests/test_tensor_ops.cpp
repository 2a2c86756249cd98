#include <doctest.h>

#include <random>

#include "recurv/corpus.hpp"
#include "recurv/curvature.hpp"
#include "recurv/expr.hpp"
#include "recurv/tensor_ops.hpp"
#include "support/generators.hpp"

using namespace recurv;
using recurv::testing::random_symmetric2;

namespace {

CurvatureBundle paper_bundle() {
    Manifest m = corpus_manifest("paper_example");
    return compute_curvature(build_metric(m.chart, m.metric_tensor()));
}

CurvatureBundle flat_bundle() {
    Manifest m = corpus_manifest("flat_r4");
    return compute_curvature(build_metric(m.chart, m.metric_tensor()));
}

RationalFunction rf(const ChartPtr& c, const std::string& e) {
    return parse_expression(e, *c);
}

} // namespace

TEST_CASE("kulkarni-nomizu golden components") {
    CurvatureBundle b = paper_bundle();
    const ChartPtr& c = b.chart();
    Tensor gg = kulkarni_nomizu(b.g(), b.g());
    CHECK(gg.at({0, 1, 0, 1}) == rf(c, "-2*x1*x2"));
    Tensor gs = kulkarni_nomizu(b.g(), b.ricci);
    CHECK(gs.at({0, 1, 0, 1}) == rf(c, "1/2*(1/x2 + 1/x1)"));
    CHECK(gg.symmetry_valid());
    CHECK(gs.symmetry_valid());
}

TEST_CASE("kulkarni-nomizu on the identity metric") {
    CurvatureBundle b = flat_bundle();
    Tensor gg = kulkarni_nomizu(b.g(), b.g());
    CHECK(gg.at({0, 1, 0, 1}) == RationalFunction::constant(4, make_rational(-2)));
    CHECK(gg.at({0, 1, 2, 3}).is_zero());
}

TEST_CASE("kulkarni-nomizu is commutative and bilinear") {
    std::mt19937 rng(5);
    auto chart = Chart::standard(3);
    for (int trial = 0; trial < 5; ++trial) {
        Tensor A = random_symmetric2(rng, chart, 1);
        Tensor E = random_symmetric2(rng, chart, 1);
        Tensor F = random_symmetric2(rng, chart, 1);
        CHECK(kulkarni_nomizu(A, E) == kulkarni_nomizu(E, A));
        Tensor sum = E + F;
        sum.set_symmetry(Symmetry::Symmetric2);
        CHECK(kulkarni_nomizu(A, sum) == kulkarni_nomizu(A, E) + kulkarni_nomizu(A, F));
        CHECK(kulkarni_nomizu(A, E).symmetry_valid());
    }
}

TEST_CASE("wedge of rank-2 with rank-k reduces to kulkarni-nomizu") {
    std::mt19937 rng(9);
    auto chart = Chart::standard(3);
    Tensor A = random_symmetric2(rng, chart, 1);
    Tensor E = random_symmetric2(rng, chart, 1);
    Tensor w = wedge_2_with_k(A, E);
    Tensor kn = kulkarni_nomizu(A, E);
    CHECK(w.size() == kn.size());
    bool equal = true;
    for (std::size_t i = 0; i < w.size(); ++i) equal = equal && w[i] == kn[i];
    CHECK(equal);

    Tensor zero(chart, 2, Symmetry::Symmetric2);
    CHECK(wedge_2_with_k(zero, E).is_zero());
}

TEST_CASE("wedge with a 1-form square against the golden metric") {
    CurvatureBundle b = paper_bundle();
    const ChartPtr& c = b.chart();
    Tensor eta = coordinate_one_form(c, 0);
    Tensor etaeta(c, 2, Symmetry::Symmetric2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) etaeta.at({i, j}) = eta.at({i}) * eta.at({j});
    Tensor w = wedge_2_with_k(b.g(), etaeta);
    CHECK(w.at({0, 1, 0, 1}) == rf(c, "-x1"));
}

TEST_CASE("exterior product and derivative") {
    auto chart = Chart::standard(4);
    int n = 4;
    Tensor dx1 = coordinate_one_form(chart, 0);
    Tensor dx2 = coordinate_one_form(chart, 1);
    CHECK(exterior_product(dx1, dx1).is_zero());
    Tensor w = exterior_product(dx1, dx2);
    CHECK(w.at({0, 1}) == RationalFunction::constant(n, make_rational(1, 2)));
    CHECK(w.at({1, 0}) == RationalFunction::constant(n, make_rational(-1, 2)));

    // (x2 dx1) ^ (x1 dx2)
    Tensor a = dx1.scaled(RationalFunction::variable(n, 1));
    Tensor bb = dx2.scaled(RationalFunction::variable(n, 0));
    CHECK(exterior_product(a, bb).at({0, 1}) ==
          rf(chart, "x1*x2/2"));

    // d(x2 dx1) has component (1,2) = -1
    Tensor da = exterior_derivative(a);
    CHECK(da.at({0, 1}) == RationalFunction::constant(n, make_rational(-1)));
    // exact forms are closed: d(d(f)) = 0 for f = x1*x2
    Tensor df(chart, 1, Symmetry::OneForm);
    RationalFunction f = rf(chart, "x1*x2");
    for (int i = 0; i < n; ++i) df.at({i}) = f.derivative(i);
    CHECK(exterior_derivative(df).is_zero());
}

TEST_CASE("exterior derivative kills gradients of random potentials") {
    std::mt19937 rng(13);
    auto chart = Chart::standard(3);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial pot = recurv::testing::random_polynomial(rng, 3, 3, 4);
        Tensor grad(chart, 1, Symmetry::OneForm);
        for (int i = 0; i < 3; ++i) grad.at({i}) = RationalFunction(pot.derivative(i));
        CHECK(exterior_derivative(grad).is_zero());
    }
}

TEST_CASE("second level data") {
    CurvatureBundle b = paper_bundle();
    SecondLevelData lvl = second_level(b.g(), b.g_inv());
    CHECK(lvl.squared == b.g());
    CHECK(lvl.trace == RationalFunction::constant(4, make_rational(4)));
    CHECK(lvl.trace2 == RationalFunction::constant(4, make_rational(4)));

    Tensor zero(b.chart(), 2, Symmetry::Symmetric2);
    SecondLevelData zl = second_level(zero, b.g_inv());
    CHECK(zl.squared.is_zero());
    CHECK(zl.trace.is_zero());

    // Ricci operator of the product metric is diagonal with double
    // eigenvalues; S^2 has the squared eigenvalues.
    const ChartPtr& c = b.chart();
    RationalFunction lam1 = rf(c, "-(x1+x2)/(4*x1^2*x2^2)");
    SecondLevelData slvl = second_level(b.ricci, b.g_inv());
    CHECK(slvl.squared.at({0, 0}) == lam1 * lam1 * b.g().at({0, 0}));
}

TEST_CASE("curvature action annihilates the metric") {
    CurvatureBundle b = paper_bundle();
    CHECK(curvature_action(b.riemann, b.g(), b.g_inv()).is_zero());
}

TEST_CASE("curvature action equals the covariant-derivative commutator") {
    // (D.T)_{I,x,y} with D = R must match the double covariant derivative
    // antisymmetrized in the two appended slots.
    CurvatureBundle b = paper_bundle();
    Tensor T = b.ricci;
    Tensor ddT = covariant_derivative(covariant_derivative(T, b.gamma), b.gamma);
    Tensor action = curvature_action(b.riemann, T, b.g_inv());
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
        for (int j = 0; j < 4 && ok; ++j)
            for (int x = 0; x < 4 && ok; ++x)
                for (int y = 0; y < 4 && ok; ++y)
                    ok = (action.at({i, j, x, y}) -
                          (ddT.at({i, j, x, y}) - ddT.at({i, j, y, x})))
                             .is_zero();
    CHECK(ok);
}

TEST_CASE("q_action basics") {
    CurvatureBundle b = paper_bundle();
    CHECK(q_action(b.g(), b.g()).is_zero());
    Tensor gg = kulkarni_nomizu(b.g(), b.g());
    CHECK(q_action(b.g(), gg).is_zero());

    Tensor qgr = q_action(b.g(), b.riemann);
    std::vector<Rational> pt = {Rational(1), Rational(2), Rational(3), Rational(4)};
    bool nonzero_somewhere = false;
    qgr.for_each_index([&](std::span<const int>, std::size_t fl) {
        if (nonzero_somewhere || qgr[fl].is_zero()) return;
        if (qgr[fl].evaluate(pt) != 0) nonzero_somewhere = true;
    });
    CHECK(nonzero_somewhere);

    // antisymmetry in the appended pair
    bool antisym = true;
    qgr.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        if (!antisym) return;
        std::vector<int> sw(idx.begin(), idx.end());
        std::swap(sw[4], sw[5]);
        antisym = (qgr[fl] + qgr.at(sw)).is_zero();
    });
    CHECK(antisym);
}

TEST_CASE("vector wedge array") {
    CurvatureBundle flat = flat_bundle();
    Tensor w = wedge_vector_with_T(flat.g(), flat.g());
    // (X ^_g Y)(X1,X2) = g(Y,X1)g(X,X2) - g(X,X1)g(Y,X2) on the identity metric
    CHECK(w.at({0, 1, 1, 0}) == RationalFunction::one(4));
    CHECK(w.at({0, 1, 0, 1}) == RationalFunction::constant(4, make_rational(-1)));
    Tensor zero(flat.chart(), 2, Symmetry::Symmetric2);
    CHECK(wedge_vector_with_T(zero, flat.g()).is_zero());

    // the g-wedge array is half of g^g up to slot order
    CurvatureBundle b = paper_bundle();
    Tensor wg = wedge_vector_with_T(b.g(), b.g());
    Tensor gg = kulkarni_nomizu(b.g(), b.g());
    bool ok = true;
    wg.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        if (!ok) return;
        // w[i,j,x,y] = (g^g)[x,y,i,j] / 2
        RationalFunction expect =
            gg.at({idx[2], idx[3], idx[0], idx[1]}).scaled(make_rational(1, 2));
        ok = (wg[fl] - expect).is_zero();
    });
    CHECK(ok);
}

TEST_CASE("contract") {
    CurvatureBundle b = paper_bundle();
    Tensor gg = kulkarni_nomizu(b.g(), b.g());
    Tensor c = contract(gg, 0, 3, b.g_inv());
    // contraction of g^g over the outer slots is 2(n-1) g
    CHECK(c == b.g().scaled(RationalFunction::constant(4, make_rational(6))));
    Tensor s = contract(b.riemann, 0, 3, b.g_inv());
    CHECK(s == b.ricci);
    Tensor zero(b.chart(), 4, Symmetry::General);
    CHECK(contract(zero, 0, 3, b.g_inv()).is_zero());
    CHECK_THROWS_AS(contract(gg, 1, 1, b.g_inv()), TensorShapeError);
}
