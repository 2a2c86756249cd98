#include "recurv/detectors.hpp"

#include <cassert>

namespace recurv {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

const char* structure_kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::Recurrent: return "recurrent";
        case StructureKind::GeneralizedRecurrent2: return "generalized_recurrent_2";
        case StructureKind::QuasiGeneralized: return "quasi_generalized";
        case StructureKind::QuasiGeneralizedLike: return "quasi_generalized_like";
        case StructureKind::HyperGeneralized: return "hyper_generalized";
        case StructureKind::WeaklyGeneralized: return "weakly_generalized";
        case StructureKind::SuperGeneralized: return "super_generalized";
    }
    return "?";
}

DetectorBasis detector_basis(const CurvatureBundle& b) {
    return DetectorBasis{kulkarni_nomizu(b.g(), b.g()), kulkarni_nomizu(b.g(), b.ricci),
                         kulkarni_nomizu(b.ricci, b.ricci)};
}

namespace {

Tensor symmetric_square_of_form(const Tensor& eta) {
    Tensor t(eta.chart(), 2, Symmetry::Symmetric2);
    int n = eta.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at({i, j}) = eta.at({i}) * eta.at({j});
    return t;
}

} // namespace

StructureResult detect_structure(StructureKind kind, const Tensor& T,
                                 const CurvatureBundle& b, const Tensor* eta) {
    StructureResult out;
    out.name = structure_kind_name(kind);
    int n = b.dim();

    std::vector<Tensor> owned;
    std::vector<const Tensor*> basis;
    std::vector<std::string> names;
    basis.push_back(&T);
    switch (kind) {
        case StructureKind::Recurrent:
            names = {"Pi"};
            break;
        case StructureKind::GeneralizedRecurrent2:
            if (T.rank() != 2)
                throw TensorShapeError("generalized recurrent structure needs a rank-2 tensor");
            names = {"PiBar", "PhiBar"};
            basis.push_back(&b.g());
            break;
        case StructureKind::HyperGeneralized: {
            names = {"Pi", "Psi"};
            owned.push_back(kulkarni_nomizu(b.g(), b.ricci));
            break;
        }
        case StructureKind::WeaklyGeneralized: {
            names = {"Pi", "Psi"};
            owned.push_back(kulkarni_nomizu(b.ricci, b.ricci));
            break;
        }
        case StructureKind::SuperGeneralized: {
            names = {"Pi", "Phi", "Psi", "Theta"};
            owned.push_back(kulkarni_nomizu(b.ricci, b.ricci));
            owned.push_back(kulkarni_nomizu(b.g(), b.ricci));
            owned.push_back(kulkarni_nomizu(b.g(), b.g()));
            break;
        }
        case StructureKind::QuasiGeneralized: {
            if (!eta) throw TensorShapeError("quasi generalized structure needs an eta 1-form");
            names = {"Pi", "Psi"};
            Tensor aug = b.g() + symmetric_square_of_form(*eta);
            aug.set_symmetry(Symmetry::Symmetric2);
            owned.push_back(kulkarni_nomizu(b.g(), aug));
            break;
        }
        case StructureKind::QuasiGeneralizedLike: {
            if (!eta) throw TensorShapeError("quasi generalized structure needs an eta 1-form");
            names = {"Pi", "Phi", "Psi"};
            owned.push_back(kulkarni_nomizu(b.g(), b.g()));
            owned.push_back(kulkarni_nomizu(b.g(), symmetric_square_of_form(*eta)));
            break;
        }
    }
    for (const Tensor& t : owned) basis.push_back(&t);

    Tensor lhs = covariant_derivative(T, b.gamma);
    out.family = solve_linear_family(lhs, basis, names);

    if (out.family.lhs_identically_zero()) {
        out.verdict = Verdict::Degenerate;
        out.note = "nabla T vanishes identically; the defining set is empty";
    } else if (out.family.any_inconsistent()) {
        out.verdict = Verdict::Fails;
    } else {
        out.verdict = Verdict::Holds;
    }

    for (const auto& d : out.family.directions)
        out.excluded_loci.insert(d.pivot_loci.begin(), d.pivot_loci.end());
    if (!b.metric.det.num().is_constant())
        out.excluded_loci.insert(b.metric.det.num().unit_normal().str(
            std::span<const std::string>(b.chart()->coordinates)));
    (void)n;
    return out;
}

RoterResult detect_roter(const CurvatureBundle& b) {
    RoterResult out(b.dim());
    DetectorBasis basis = detector_basis(b);
    std::span<const std::string> names(b.chart()->coordinates);

    std::vector<std::vector<RationalFunction>> rows;
    std::vector<RationalFunction> rhs;
    basis.gg.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        const RationalFunction& r = b.riemann[fl];
        const RationalFunction& c1 = basis.gg[fl];
        const RationalFunction& c2 = basis.gs[fl];
        const RationalFunction& c3 = basis.ss[fl];
        if (r.is_zero() && c1.is_zero() && c2.is_zero() && c3.is_zero()) return;
        rows.push_back({c1, c2, c3});
        rhs.push_back(r);
    });
    out.solve = solve_linear_system(rows, rhs, b.dim(), names);
    out.excluded_loci = out.solve.pivot_loci;
    if (!out.solve.consistent()) {
        out.verdict = Verdict::Fails;
        return out;
    }
    out.verdict = Verdict::Holds;
    out.unique = out.solve.status == LinearSolveResult::Status::Unique;
    out.n1 = out.solve.particular[0];
    out.n2 = out.solve.particular[1];
    out.n3 = out.solve.particular[2];
    out.proper = !out.n3.is_zero();
    return out;
}

EinsteinClassResult detect_einstein_class(const CurvatureBundle& b) {
    int n = b.dim();
    EinsteinClassResult out(n);
    std::span<const std::string> names(b.chart()->coordinates);
    const Tensor& S = b.ricci;
    const Tensor& g = b.g();

    // Einstein: S - (kappa/n) g = 0.
    RationalFunction kn = b.scalar.scaled(Rational(1, n));
    out.einstein = (S - g.scaled(kn)).is_zero();

    // Ein(2), monic branch: S^2 + a2 S + a3 g = 0.
    {
        std::vector<std::vector<RationalFunction>> rows;
        std::vector<RationalFunction> rhs;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const RationalFunction& s2 = b.ricci_sq.at({i, j});
                const RationalFunction& s = S.at({i, j});
                const RationalFunction& gg = g.at({i, j});
                if (s2.is_zero() && s.is_zero() && gg.is_zero()) continue;
                rows.push_back({s, gg});
                rhs.push_back(-s2);
            }
        LinearSolveResult res = solve_linear_system(rows, rhs, n, names);
        if (res.consistent()) {
            out.ein2_holds = true;
            out.a2 = res.particular[0];
            out.a3 = res.particular[1];
        }
    }
    out.ein2_proper = out.ein2_holds && !out.einstein;

    // Quasi-Einstein: rank condition on B(alpha) = S - alpha g. All 2x2 minors
    // of B are quadratics in alpha; alpha is extracted from the first
    // nondegenerate minor and verified globally.
    if (out.einstein) {
        out.quasi = EinsteinClassResult::Quasi::Fails;
        out.quasi_note = "Einstein: the residual S - alpha g has rank 0, no rank-1 part";
        return out;
    }
    auto minor_poly = [&](int i, int j, int k, int l, RationalFunction& c0,
                          RationalFunction& c1, RationalFunction& c2) {
        c0 = S.at({i, k}) * S.at({j, l}) - S.at({i, l}) * S.at({j, k});
        c1 = S.at({i, k}) * g.at({j, l}) + g.at({i, k}) * S.at({j, l}) -
             S.at({i, l}) * g.at({j, k}) - g.at({i, l}) * S.at({j, k});
        c2 = g.at({i, k}) * g.at({j, l}) - g.at({i, l}) * g.at({j, k});
    };
    auto minors_vanish_at = [&](const RationalFunction& alpha) {
        RationalFunction c0(n), c1(n), c2(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        minor_poly(i, j, k, l, c0, c1, c2);
                        if (!(c0 - c1 * alpha + c2 * alpha * alpha).is_zero()) return false;
                    }
        return true;
    };

    std::vector<RationalFunction> candidates;
    bool undetermined = false;
    {
        RationalFunction c0(n), c1(n), c2(n);
        bool found = false;
        for (int i = 0; i < n && !found; ++i)
            for (int j = i + 1; j < n && !found; ++j)
                for (int k = 0; k < n && !found; ++k)
                    for (int l = k + 1; l < n && !found; ++l) {
                        minor_poly(i, j, k, l, c0, c1, c2);
                        if (c2.is_zero() && c1.is_zero()) continue;
                        found = true;
                        if (c2.is_zero()) {
                            candidates.push_back(c0 / c1);
                        } else {
                            // alpha = (c1 +- sqrt(disc)) / (2 c2)
                            RationalFunction disc = c1 * c1 - c0 * c2.scaled(4);
                            auto sn = disc.num().sqrt_exact();
                            auto sd = disc.den().sqrt_exact();
                            if (disc.is_zero()) {
                                candidates.push_back(c1 / c2.scaled(2));
                            } else if (sn && sd) {
                                RationalFunction root(*sn, *sd);
                                candidates.push_back((c1 + root) / c2.scaled(2));
                                candidates.push_back((c1 - root) / c2.scaled(2));
                            } else {
                                undetermined = true;
                            }
                        }
                    }
    }

    for (const RationalFunction& alpha : candidates) {
        if (!minors_vanish_at(alpha)) continue;
        Tensor B = S - g.scaled(alpha);
        if (B.is_zero()) continue; // would be Einstein, handled above
        int m = -1;
        for (int i = 0; i < n; ++i)
            if (!B.at({i, i}).is_zero()) { m = i; break; }
        if (m < 0) continue; // symmetric rank-1 residual must have a nonzero diagonal
        out.alpha = alpha;
        out.beta = B.at({m, m}).inverse();
        out.eta.clear();
        for (int i = 0; i < n; ++i) out.eta.push_back(B.at({i, m}));
        // Global verification: S = alpha g + beta eta (x) eta.
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                ok = (S.at({i, j}) - alpha * g.at({i, j}) -
                      out.beta * out.eta[i] * out.eta[j])
                         .is_zero();
        if (ok) {
            out.quasi = EinsteinClassResult::Quasi::Holds;
            return out;
        }
    }
    if (undetermined && candidates.empty()) {
        out.quasi = EinsteinClassResult::Quasi::Undetermined;
        out.quasi_note =
            "discriminant of the minor equation is not a rational-function square; "
            "any associated scalar lies outside the exact field";
    } else {
        out.quasi = EinsteinClassResult::Quasi::Fails;
        out.quasi_note = "no rational alpha makes S - alpha g a rank-1 tensor";
    }
    return out;
}

SemisymmetryResult check_semisymmetry(const Tensor& T, const CurvatureBundle& b) {
    int n = b.dim();
    SemisymmetryResult out(n);
    Tensor rt = curvature_action(b.riemann, T, b.g_inv());
    Tensor qt = q_action(b.g(), T);
    out.semisymmetric = rt.is_zero();
    out.q_zero = qt.is_zero();
    if (out.q_zero) {
        out.pseudo = SemisymmetryResult::Pseudo::NotApplicable;
        out.note = out.semisymmetric
                       ? "Q(g,T) vanishes identically; the pseudosymmetry defining set is empty"
                       : "R.T is nonzero but Q(g,T) vanishes identically";
        if (!out.semisymmetric) out.pseudo = SemisymmetryResult::Pseudo::Fails;
        return out;
    }
    if (out.semisymmetric) {
        out.pseudo = SemisymmetryResult::Pseudo::Holds;
        out.l_t = RationalFunction::zero(n);
        return out;
    }
    // Single scalar: L = (R.T)_c / Q_c on the first nonzero Q component, then
    // checked everywhere.
    bool have = false;
    for (std::size_t fl = 0; fl < qt.size(); ++fl) {
        if (qt[fl].is_zero()) continue;
        RationalFunction cand = rt[fl] / qt[fl];
        if (!have) {
            out.l_t = cand;
            have = true;
        }
    }
    for (std::size_t fl = 0; fl < qt.size(); ++fl) {
        if ((rt[fl] - out.l_t * qt[fl]).is_zero()) continue;
        out.pseudo = SemisymmetryResult::Pseudo::Fails;
        out.note = "component ratios of R.T against Q(g,T) disagree";
        return out;
    }
    out.pseudo = SemisymmetryResult::Pseudo::Holds;
    return out;
}

} // namespace recurv
