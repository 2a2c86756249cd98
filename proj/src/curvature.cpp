#include "recurv/curvature.hpp"

#include <cassert>

namespace recurv {

Christoffel christoffel(const MetricData& m) {
    int n = m.chart->dimension;
    auto gid = [n](int h, int i, int j) {
        return (static_cast<std::size_t>(h) * n + i) * n + j;
    };
    // Cache the metric partials.
    std::vector<RationalFunction> dg(static_cast<std::size_t>(n) * n * n,
                                     RationalFunction::zero(n));
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg[gid(l, i, j)] = m.g.at({i, j}).derivative(l);

    Christoffel gamma(static_cast<std::size_t>(n) * n * n, RationalFunction::zero(n));
    Rational half(1, 2);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                RationalFunction acc(n);
                for (int k = 0; k < n; ++k) {
                    if (m.g_inv.at({h, k}).is_zero()) continue;
                    RationalFunction term = dg[gid(i, j, k)] + dg[gid(j, i, k)] - dg[gid(k, i, j)];
                    if (term.is_zero()) continue;
                    acc += m.g_inv.at({h, k}) * term;
                }
                acc = acc.scaled(half);
                gamma[gid(h, i, j)] = acc;
                gamma[gid(h, j, i)] = std::move(acc);
            }
    return gamma;
}

Tensor covariant_derivative(const Tensor& T, const Christoffel& gamma) {
    int n = T.dim();
    int k = T.rank();
    auto gid = [n](int h, int i, int j) {
        return (static_cast<std::size_t>(h) * n + i) * n + j;
    };
    Tensor r(T.chart(), k + 1, Symmetry::General);
    std::vector<int> tidx(k);
    r.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        int l = idx[k];
        for (int m = 0; m < k; ++m) tidx[m] = idx[m];
        RationalFunction acc = T.at(tidx).derivative(l);
        for (int m = 0; m < k; ++m) {
            int orig = tidx[m];
            for (int p = 0; p < n; ++p) {
                const RationalFunction& ga = gamma[gid(p, l, orig)];
                if (ga.is_zero()) continue;
                tidx[m] = p;
                const RationalFunction& tv = T.at(tidx);
                if (!tv.is_zero()) acc -= ga * tv;
            }
            tidx[m] = orig;
        }
        r[fl] = std::move(acc);
    });
    return r;
}

CurvatureBundle compute_curvature(MetricData m, bool flip_riemann_sign) {
    int n = m.chart->dimension;
    ChartPtr chart = m.chart;
    Christoffel gamma = christoffel(m);
    auto gid = [n](int h, int i, int j) {
        return (static_cast<std::size_t>(h) * n + i) * n + j;
    };

    // R^h_{ijk} = d_j Gamma^h_{ik} - d_k Gamma^h_{ij}
    //            + Gamma^h_{jp} Gamma^p_{ik} - Gamma^h_{kp} Gamma^p_{ij},
    // lowered on the first slot. This orientation reproduces the golden
    // component values of the bundled corpus exactly.
    Tensor riem(chart, 4, Symmetry::CurvatureType4);
    std::vector<RationalFunction> rmix(static_cast<std::size_t>(n) * n * n * n,
                                       RationalFunction::zero(n));
    auto rid = [n](int h, int i, int j, int k) {
        return ((static_cast<std::size_t>(h) * n + i) * n + j) * n + k;
    };
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    RationalFunction v = gamma[gid(h, i, k)].derivative(j) -
                                         gamma[gid(h, i, j)].derivative(k);
                    for (int p = 0; p < n; ++p) {
                        const RationalFunction& a = gamma[gid(h, j, p)];
                        const RationalFunction& b = gamma[gid(p, i, k)];
                        if (!a.is_zero() && !b.is_zero()) v += a * b;
                        const RationalFunction& c = gamma[gid(h, k, p)];
                        const RationalFunction& d = gamma[gid(p, i, j)];
                        if (!c.is_zero() && !d.is_zero()) v -= c * d;
                    }
                    rmix[rid(h, i, j, k)] = v;
                    rmix[rid(h, i, k, j)] = -v;
                }
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    RationalFunction acc(n);
                    for (int p = 0; p < n; ++p) {
                        if (m.g.at({h, p}).is_zero() || rmix[rid(p, i, j, k)].is_zero()) continue;
                        acc += m.g.at({h, p}) * rmix[rid(p, i, j, k)];
                    }
                    if (flip_riemann_sign) acc = -acc;
                    riem.at({h, i, j, k}) = std::move(acc);
                }

    // Ricci is the metric contraction over slots (1,4); this is the pairing
    // that matches the golden component tables.
    Tensor ricci(chart, 2, Symmetry::Symmetric2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalFunction acc(n);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (m.g_inv.at({p, q}).is_zero()) continue;
                    const RationalFunction& rv = riem.at({p, i, j, q});
                    if (rv.is_zero()) continue;
                    acc += m.g_inv.at({p, q}) * rv;
                }
            ricci.at({i, j}) = std::move(acc);
        }

    SecondLevelData lvl = second_level(ricci, m.g_inv);
    RationalFunction kappa = lvl.trace;

    Tensor nabla_r = covariant_derivative(riem, gamma);
    Tensor nabla_s = covariant_derivative(ricci, gamma);
    Tensor dkappa(chart, 1, Symmetry::OneForm);
    for (int i = 0; i < n; ++i) dkappa.at({i}) = kappa.derivative(i);

    return CurvatureBundle{std::move(m),     std::move(gamma), std::move(riem),
                           std::move(ricci), std::move(kappa), std::move(lvl.squared),
                           std::move(lvl.trace2), std::move(nabla_r), std::move(nabla_s),
                           std::move(dkappa)};
}

Tensor derived_tensor(DerivedKind kind, const CurvatureBundle& b) {
    int n = b.dim();
    if (n < 3) throw TensorShapeError("derived tensors need dimension >= 3");
    const Tensor& R = b.riemann;
    const Tensor& g = b.g();
    const Tensor& S = b.ricci;
    switch (kind) {
        case DerivedKind::Conformal: {
            Tensor gS = kulkarni_nomizu(g, S);
            Tensor gg = kulkarni_nomizu(g, g);
            RationalFunction c1 = RationalFunction::constant(n, Rational(1, n - 2));
            RationalFunction c2 =
                b.scalar.scaled(Rational(1, 2 * static_cast<long>(n - 1) * (n - 2)));
            Tensor r = R - gS.scaled(c1) + gg.scaled(c2);
            r.set_symmetry(Symmetry::CurvatureType4);
            return r;
        }
        case DerivedKind::Projective: {
            // P_{hijk} = R_{hijk} - (S_{ij} g_{hk} - S_{hj} g_{ik})/(n-1);
            // only pair-asymmetric, so tagged General.
            Tensor r(b.chart(), 4, Symmetry::General);
            Rational c(1, n - 1);
            for (int h = 0; h < n; ++h)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) {
                            RationalFunction v =
                                S.at({i, j}) * g.at({h, k}) - S.at({h, j}) * g.at({i, k});
                            r.at({h, i, j, k}) = R.at({h, i, j, k}) - v.scaled(c);
                        }
            return r;
        }
        case DerivedKind::Concircular: {
            Tensor gg = kulkarni_nomizu(g, g);
            RationalFunction c =
                b.scalar.scaled(Rational(1, 2 * static_cast<long>(n) * (n - 1)));
            Tensor r = R - gg.scaled(c);
            r.set_symmetry(Symmetry::CurvatureType4);
            return r;
        }
        case DerivedKind::Conharmonic: {
            Tensor gS = kulkarni_nomizu(g, S);
            RationalFunction c = RationalFunction::constant(n, Rational(1, n - 2));
            Tensor r = R - gS.scaled(c);
            r.set_symmetry(Symmetry::CurvatureType4);
            return r;
        }
    }
    throw TensorShapeError("unknown derived tensor kind");
}

const char* derived_kind_name(DerivedKind kind) {
    switch (kind) {
        case DerivedKind::Conformal: return "conformal";
        case DerivedKind::Projective: return "projective";
        case DerivedKind::Concircular: return "concircular";
        case DerivedKind::Conharmonic: return "conharmonic";
    }
    return "?";
}

} // namespace recurv
