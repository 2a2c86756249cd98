#include "recurv/tensor_ops.hpp"

#include <cassert>

namespace recurv {

namespace {

void require_same_chart(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim() || !(*a.chart() == *b.chart()))
        throw TensorShapeError("tensors live on different charts");
}

void require_symmetric2(const Tensor& a, const char* what) {
    if (a.rank() != 2) throw TensorShapeError(std::string(what) + ": rank-2 tensor required");
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.at({i, j}) != a.at({j, i}))
                throw TensorShapeError(std::string(what) + ": symmetric tensor required");
}

} // namespace

Tensor kulkarni_nomizu(const Tensor& A, const Tensor& E) {
    require_same_chart(A, E);
    require_symmetric2(A, "kulkarni_nomizu");
    require_symmetric2(E, "kulkarni_nomizu");
    int n = A.dim();
    Tensor r(A.chart(), 4, Symmetry::CurvatureType4);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    RationalFunction v = A.at({h, k}) * E.at({i, j}) + A.at({i, j}) * E.at({h, k}) -
                                         A.at({h, j}) * E.at({i, k}) - A.at({i, k}) * E.at({h, j});
                    r.at({h, i, j, k}) = std::move(v);
                }
    return r;
}

Tensor wedge_2_with_k(const Tensor& A, const Tensor& T) {
    require_same_chart(A, T);
    require_symmetric2(A, "wedge_2_with_k");
    if (T.rank() < 2) throw TensorShapeError("wedge_2_with_k: T must have rank >= 2");
    int n = A.dim();
    int k = T.rank();
    Tensor r(A.chart(), k + 2, Symmetry::General);
    std::vector<int> out(k + 2), tidx(k);
    r.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        int a = idx[0], b = idx[1], c = idx[2], d = idx[3];
        for (int m = 0; m < k - 2; ++m) tidx[m + 2] = idx[4 + m];
        auto tval = [&](int p, int q) -> const RationalFunction& {
            tidx[0] = p;
            tidx[1] = q;
            return T.at(tidx);
        };
        RationalFunction v = A.at({a, d}) * tval(b, c) + A.at({b, c}) * tval(a, d) -
                             A.at({a, c}) * tval(b, d) - A.at({b, d}) * tval(a, c);
        r[fl] = std::move(v);
    });
    return r;
}

Tensor exterior_product(const Tensor& P, const Tensor& Q) {
    require_same_chart(P, Q);
    assert(P.rank() == 1 && Q.rank() == 1);
    int n = P.dim();
    Rational half(1, 2);
    Tensor r(P.chart(), 2, Symmetry::TwoForm);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at({i, j}) = (P.at({i}) * Q.at({j}) - P.at({j}) * Q.at({i})).scaled(half);
    return r;
}

Tensor exterior_derivative(const Tensor& P) {
    assert(P.rank() == 1);
    int n = P.dim();
    Tensor r(P.chart(), 2, Symmetry::TwoForm);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at({i, j}) = P.at({j}).derivative(i) - P.at({i}).derivative(j);
    return r;
}

SecondLevelData second_level(const Tensor& A, const Tensor& g_inv) {
    require_same_chart(A, g_inv);
    require_symmetric2(A, "second_level");
    int n = A.dim();
    Tensor sq(A.chart(), 2, Symmetry::Symmetric2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalFunction acc(n);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (A.at({i, k}).is_zero() || g_inv.at({k, l}).is_zero()) continue;
                    acc += A.at({i, k}) * g_inv.at({k, l}) * A.at({l, j});
                }
            sq.at({i, j}) = std::move(acc);
        }
    RationalFunction tr(n), tr2(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (g_inv.at({i, j}).is_zero()) continue;
            tr += g_inv.at({i, j}) * A.at({i, j});
            tr2 += g_inv.at({i, j}) * sq.at({i, j});
        }
    return SecondLevelData{std::move(sq), std::move(tr), std::move(tr2)};
}

Tensor curvature_action(const Tensor& D, const Tensor& T, const Tensor& g_inv) {
    require_same_chart(D, T);
    assert(D.rank() == 4);
    int n = D.dim();
    int k = T.rank();
    // Mixed components D_{xyi}{}^p raised on the last slot.
    Tensor dmix(D.chart(), 4, Symmetry::General);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int i = 0; i < n; ++i)
                for (int p = 0; p < n; ++p) {
                    RationalFunction acc(n);
                    for (int q = 0; q < n; ++q) {
                        if (g_inv.at({p, q}).is_zero() || D.at({x, y, i, q}).is_zero()) continue;
                        acc += g_inv.at({p, q}) * D.at({x, y, i, q});
                    }
                    dmix.at({x, y, i, p}) = std::move(acc);
                }
    Tensor r(T.chart(), k + 2, Symmetry::General);
    std::vector<int> tidx(k);
    r.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        int x = idx[k], y = idx[k + 1];
        if (x == y) return; // antisymmetric in the appended pair
        RationalFunction acc(n);
        for (int m = 0; m < k; ++m) {
            for (int im = 0; im < k; ++im) tidx[im] = idx[im];
            int orig = idx[m];
            for (int p = 0; p < n; ++p) {
                const RationalFunction& dv = dmix.at({x, y, orig, p});
                if (dv.is_zero()) continue;
                tidx[m] = p;
                const RationalFunction& tv = T.at(tidx);
                if (tv.is_zero()) continue;
                acc -= dv * tv;
            }
            tidx[m] = orig;
        }
        r[fl] = std::move(acc);
    });
    return r;
}

Tensor q_action(const Tensor& A, const Tensor& T) {
    require_same_chart(A, T);
    require_symmetric2(A, "q_action");
    int n = A.dim();
    int k = T.rank();
    Tensor r(T.chart(), k + 2, Symmetry::General);
    std::vector<int> tidx(k);
    r.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        int x = idx[k], y = idx[k + 1];
        if (x == y) return;
        RationalFunction acc(n);
        for (int m = 0; m < k; ++m) {
            for (int im = 0; im < k; ++im) tidx[im] = idx[im];
            int orig = idx[m];
            const RationalFunction& axm = A.at({x, orig});
            const RationalFunction& aym = A.at({y, orig});
            if (!axm.is_zero()) {
                tidx[m] = y;
                const RationalFunction& tv = T.at(tidx);
                if (!tv.is_zero()) acc += axm * tv;
            }
            if (!aym.is_zero()) {
                tidx[m] = x;
                const RationalFunction& tv = T.at(tidx);
                if (!tv.is_zero()) acc -= aym * tv;
            }
            tidx[m] = orig;
        }
        r[fl] = std::move(acc);
    });
    return r;
}

Tensor wedge_vector_with_T(const Tensor& T, const Tensor& g) {
    require_same_chart(T, g);
    if (T.rank() < 2) throw TensorShapeError("wedge_vector_with_T: rank >= 2 required");
    int k = T.rank();
    Tensor r(T.chart(), k + 2, Symmetry::General);
    std::vector<int> tidx(k);
    r.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        int x = idx[k], y = idx[k + 1];
        tidx[1] = idx[0];
        for (int m = 2; m < k; ++m) tidx[m] = idx[m];
        tidx[0] = y;
        RationalFunction v = T.at(tidx) * g.at({x, idx[1]});
        tidx[0] = x;
        v -= T.at(tidx) * g.at({y, idx[1]});
        r[fl] = std::move(v);
    });
    return r;
}

Tensor contract(const Tensor& T, int slot_a, int slot_b, const Tensor& g_inv) {
    int k = T.rank();
    if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= k || slot_b >= k)
        throw TensorShapeError("contract: invalid slot pair");
    if (slot_a > slot_b) std::swap(slot_a, slot_b);
    int n = T.dim();
    Tensor r(T.chart(), k - 2, Symmetry::General);
    std::vector<int> tidx(k);
    r.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        int pos = 0;
        for (int m = 0; m < k; ++m) {
            if (m == slot_a || m == slot_b) continue;
            tidx[m] = idx[pos++];
        }
        RationalFunction acc(n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (g_inv.at({p, q}).is_zero()) continue;
                tidx[slot_a] = p;
                tidx[slot_b] = q;
                const RationalFunction& tv = T.at(tidx);
                if (tv.is_zero()) continue;
                acc += g_inv.at({p, q}) * tv;
            }
        r[fl] = std::move(acc);
    });
    return r;
}

Tensor outer_last(const Tensor& T, const Tensor& omega) {
    require_same_chart(T, omega);
    assert(omega.rank() == 1);
    int k = T.rank();
    int n = T.dim();
    Tensor r(T.chart(), k + 1, Symmetry::General);
    std::vector<int> tidx(k);
    r.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        const RationalFunction& w = omega.at({idx[k]});
        if (w.is_zero()) return;
        for (int m = 0; m < k; ++m) tidx[m] = idx[m];
        const RationalFunction& tv = T.at(tidx);
        if (tv.is_zero()) return;
        r[fl] = tv * w;
    });
    return r;
}

} // namespace recurv
