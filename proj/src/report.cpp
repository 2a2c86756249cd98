#include "recurv/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "recurv/corpus.hpp"
#include "recurv/expr.hpp"
#include "recurv/golden.hpp"

namespace recurv {

std::string rf_str(const RationalFunction& f, const ChartPtr& chart) {
    return f.str(std::span<const std::string>(chart->coordinates));
}

namespace {

std::string idx_key(std::span<const int> idx, int split_last = 0) {
    std::string s;
    int k = static_cast<int>(idx.size());
    for (int i = 0; i < k; ++i) {
        if (split_last && i == k - split_last) s += ",";
        s += std::to_string(idx[i] + 1);
    }
    return s;
}

Json tensor_table(const Tensor& t, int split_last = 0) {
    Json table = Json::object();
    t.for_each_index([&](std::span<const int> idx, std::size_t fl) {
        if (t[fl].is_zero()) return;
        table[idx_key(idx, split_last)] = rf_str(t[fl], t.chart());
    });
    return table;
}

Json family_json(const SolutionFamily& fam, const ChartPtr& chart) {
    Json dirs = Json::array();
    for (std::size_t l = 0; l < fam.directions.size(); ++l) {
        const DirectionSolution& d = fam.directions[l];
        Json dj;
        dj["direction"] = chart->coordinates[l];
        switch (d.status) {
            case DirectionSolution::Status::Unique: dj["status"] = "unique"; break;
            case DirectionSolution::Status::Affine: dj["status"] = "affine"; break;
            case DirectionSolution::Status::Inconsistent: dj["status"] = "inconsistent"; break;
            case DirectionSolution::Status::DegenerateLhs: dj["status"] = "degenerate-lhs"; break;
        }
        if (d.consistent()) {
            Json part = Json::object();
            for (std::size_t b = 0; b < fam.basis_names.size(); ++b)
                part[fam.basis_names[b]] = rf_str(d.particular[b], chart);
            dj["particular"] = part;
            if (!d.null_basis.empty()) {
                Json nb = Json::array();
                Json fp = Json::array();
                for (std::size_t j = 0; j < d.null_basis.size(); ++j) {
                    Json v = Json::object();
                    for (std::size_t b = 0; b < fam.basis_names.size(); ++b)
                        v[fam.basis_names[b]] = rf_str(d.null_basis[j][b], chart);
                    nb.push_back(v);
                    fp.push_back("theta_" + std::to_string(j + 1));
                }
                dj["free_parameters"] = fp;
                dj["null_basis"] = nb;
            }
        }
        if (!d.pivot_loci.empty()) dj["pivot_loci"] = d.pivot_loci;
        dirs.push_back(dj);
    }
    return dirs;
}

Json structure_json(const StructureResult& r, const ChartPtr& chart) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    if (!r.note.empty()) j["note"] = r.note;
    j["basis"] = r.family.basis_names;
    j["directions"] = family_json(r.family, chart);
    return j;
}

Json named_checks_json(const std::vector<NamedCheck>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["exercised"] = c.exercised;
        if (c.exercised) j["pass"] = c.pass;
        if (!c.note.empty()) j["note"] = c.note;
        arr.push_back(j);
    }
    return arr;
}

SgkForms forms_from(const std::vector<Tensor>& v, const ChartPtr& chart) {
    SgkForms f(chart);
    f.pi = v[0];
    f.phi = v[1];
    f.psi = v[2];
    f.theta = v[3];
    return f;
}

} // namespace

Json analyze(const Manifest& manifest, const AnalyzeOptions& opts) {
    const ChartPtr& chart = manifest.chart;
    int n = chart->dimension;
    MetricData md = build_metric(chart, manifest.metric_tensor());
    CurvatureBundle b = compute_curvature(std::move(md));
    DetectorBasis basis = detector_basis(b);
    std::optional<Tensor> eta = manifest.eta_form();

    auto want = [&](const std::string& s) {
        return opts.structures.empty() || opts.structures.count(s) > 0;
    };

    Tensor target = b.riemann;
    std::string target_name = "riemann";
    switch (opts.tensor) {
        case 'r': break;
        case 'c': target = derived_tensor(DerivedKind::Conformal, b); target_name = "conformal"; break;
        case 'p': target = derived_tensor(DerivedKind::Projective, b); target_name = "projective"; break;
        case 'w': target = derived_tensor(DerivedKind::Concircular, b); target_name = "concircular"; break;
        case 'k': target = derived_tensor(DerivedKind::Conharmonic, b); target_name = "conharmonic"; break;
        default: throw ManifestError("unknown tensor selector");
    }

    Json out;
    {
        Json mj;
        if (!manifest.name.empty()) mj["name"] = manifest.name;
        mj["dimension"] = n;
        mj["coordinates"] = chart->coordinates;
        Json pos = Json::array();
        for (int i = 0; i < n; ++i)
            if (chart->positive[i]) pos.push_back(chart->coordinates[i]);
        mj["positive"] = pos;
        Json gtab = Json::object();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const std::string& e = manifest.metric_exprs[static_cast<std::size_t>(i) * n + j];
                if (e != "0") gtab["g" + std::to_string(i + 1) + std::to_string(j + 1)] = e;
            }
        mj["metric"] = gtab;
        mj["tensor"] = target_name;
        out["manifest"] = mj;
    }

    {
        Json cj;
        cj["det_g"] = rf_str(b.metric.det, chart);
        cj["R"] = tensor_table(b.riemann);
        cj["S"] = tensor_table(b.ricci);
        cj["kappa"] = rf_str(b.scalar, chart);
        cj["kappa2"] = rf_str(b.scalar2, chart);
        cj["nabla_R"] = tensor_table(b.nabla_r, 1);
        cj["g_wedge_g"] = tensor_table(basis.gg);
        cj["g_wedge_S"] = tensor_table(basis.gs);
        cj["S_wedge_S"] = tensor_table(basis.ss);
        out["curvature"] = cj;
    }

    std::set<std::string> loci;
    if (!b.metric.det.num().is_constant())
        loci.insert(b.metric.det.num().unit_normal().str(
            std::span<const std::string>(chart->coordinates)));

    Json structures = Json::object();
    std::optional<StructureResult> sgk, gk2;
    std::optional<RoterResult> roter;
    std::optional<EinsteinClassResult> einstein;

    auto run_family = [&](const char* key, StructureKind kind, const Tensor& T,
                          const Tensor* eta_ptr) -> StructureResult {
        StructureResult r = detect_structure(kind, T, b, eta_ptr);
        loci.insert(r.excluded_loci.begin(), r.excluded_loci.end());
        structures[key] = structure_json(r, chart);
        return r;
    };

    if (want("k")) run_family("recurrent", StructureKind::Recurrent, target, nullptr);
    if (want("sk")) run_family("ricci_recurrent", StructureKind::Recurrent, b.ricci, nullptr);
    if (want("gk2"))
        gk2 = run_family("ricci_generalized_recurrent", StructureKind::GeneralizedRecurrent2,
                         b.ricci, nullptr);
    if (want("hgk")) run_family("hyper_generalized", StructureKind::HyperGeneralized, target, nullptr);
    if (want("wgk")) run_family("weakly_generalized", StructureKind::WeaklyGeneralized, target, nullptr);
    if (want("sgk"))
        sgk = run_family("super_generalized", StructureKind::SuperGeneralized, target, nullptr);
    if (want("qgk")) {
        if (eta) {
            run_family("quasi_generalized", StructureKind::QuasiGeneralized, target, &*eta);
            run_family("quasi_generalized_like", StructureKind::QuasiGeneralizedLike, target,
                       &*eta);
        } else {
            Json j;
            j["verdict"] = "skipped";
            j["note"] = "no eta 1-form supplied in the manifest extras";
            structures["quasi_generalized"] = j;
        }
    }
    if (want("roter")) {
        roter = detect_roter(b);
        loci.insert(roter->excluded_loci.begin(), roter->excluded_loci.end());
        Json j;
        j["verdict"] = verdict_name(roter->verdict);
        if (roter->verdict == Verdict::Holds) {
            j["N1"] = rf_str(roter->n1, chart);
            j["N2"] = rf_str(roter->n2, chart);
            j["N3"] = rf_str(roter->n3, chart);
            j["proper"] = roter->proper;
            j["unique"] = roter->unique;
        }
        structures["roter"] = j;
    }
    if (want("einstein")) {
        einstein.emplace(detect_einstein_class(b));
        Json j;
        j["einstein"] = einstein->einstein;
        j["ein2_holds"] = einstein->ein2_holds;
        j["ein2_proper"] = einstein->ein2_proper;
        if (einstein->ein2_holds) {
            j["a1"] = "1";
            j["a2"] = rf_str(einstein->a2, chart);
            j["a3"] = rf_str(einstein->a3, chart);
        }
        switch (einstein->quasi) {
            case EinsteinClassResult::Quasi::Holds: {
                j["quasi_einstein"] = "holds";
                j["alpha"] = rf_str(einstein->alpha, chart);
                j["beta"] = rf_str(einstein->beta, chart);
                Json etaj = Json::array();
                for (const auto& c : einstein->eta) etaj.push_back(rf_str(c, chart));
                j["eta"] = etaj;
                break;
            }
            case EinsteinClassResult::Quasi::Fails: j["quasi_einstein"] = "fails"; break;
            case EinsteinClassResult::Quasi::Undetermined:
                j["quasi_einstein"] = "undetermined";
                break;
        }
        if (!einstein->quasi_note.empty()) j["quasi_note"] = einstein->quasi_note;
        structures["einstein_class"] = j;
    }
    std::optional<Tensor> rdotr;
    if (want("semisym")) {
        SemisymmetryResult ss = check_semisymmetry(target, b);
        rdotr = curvature_action(b.riemann, b.riemann, b.g_inv());
        Json j;
        j["semisymmetric"] = ss.semisymmetric;
        switch (ss.pseudo) {
            case SemisymmetryResult::Pseudo::NotApplicable: j["pseudosymmetric"] = "not-applicable"; break;
            case SemisymmetryResult::Pseudo::Holds:
                j["pseudosymmetric"] = "holds";
                j["L"] = rf_str(ss.l_t, chart);
                break;
            case SemisymmetryResult::Pseudo::Fails: j["pseudosymmetric"] = "fails"; break;
        }
        if (!ss.note.empty()) j["note"] = ss.note;
        structures["semisymmetry"] = j;
    }
    out["structures"] = structures;

    Json theorems = Json::array();
    if (opts.run_theorems && sgk && sgk->verdict == Verdict::Holds && opts.tensor == 'r') {
        if (!rdotr) rdotr = curvature_action(b.riemann, b.riemann, b.g_inv());
        // Members: particular, a constant parameter shift, and a non-constant
        // shift (non-closed Theta when the family has free directions).
        std::vector<std::pair<std::string, std::vector<std::vector<RationalFunction>>>> members;
        members.push_back({"particular", {}});
        bool has_free = false;
        for (const auto& d : sgk->family.directions) has_free = has_free || !d.null_basis.empty();
        if (has_free) {
            std::vector<std::vector<RationalFunction>> ones(
                n, std::vector<RationalFunction>(1, RationalFunction::one(n)));
            members.push_back({"shift_1", ones});
            std::vector<std::vector<RationalFunction>> fn(
                n, std::vector<RationalFunction>(1, RationalFunction::zero(n)));
            fn[0][0] = RationalFunction::variable(n, std::min(1, n - 1));
            members.push_back({"shift_x2_dx1", fn});
        }
        for (const auto& [label, params] : members) {
            SgkForms f = forms_from(sgk->family.member_forms(chart, params), chart);
            std::vector<NamedCheck> idc = verify_sgk_identities(f, b);
            NamedCheck rr = verify_rdotr_expansion(f, b, basis, *rdotr);
            idc.push_back(rr);
            SufficiencyReport suff = check_semisymmetry_sufficiency(f, b, *rdotr);
            NamedCheck sc{"semisymmetry_sufficiency", suff.condition_met ? suff.rr_zero_verified : true,
                          true, suff.note};
            idc.push_back(sc);
            for (auto& c : idc) c.name = label + "." + c.name;
            Json arr = named_checks_json(idc);
            for (const auto& v : arr) theorems.push_back(v);
        }

        // Structure transfers need the Ricci generalized recurrent 1-forms.
        if (gk2 && gk2->verdict == Verdict::Holds) {
            SgkForms f = forms_from(sgk->family.member_forms(chart), chart);
            Gk2Forms gf = gk2_member(gk2->family, chart);
            for (DerivedKind kind : {DerivedKind::Conformal, DerivedKind::Projective,
                                     DerivedKind::Concircular, DerivedKind::Conharmonic}) {
                TransferResult tr = transfer_sgk(kind, f, gf, b, basis);
                Json j;
                j["name"] = std::string("transfer_") + derived_kind_name(kind);
                j["exercised"] = tr.applicable;
                if (tr.applicable) j["pass"] = tr.verified;
                if (!tr.note.empty()) j["note"] = tr.note;
                theorems.push_back(j);
            }
            SgkForms part = forms_from(sgk->family.member_forms(chart), chart);
            Json arr = named_checks_json(same_form_equivalences(part, b, basis));
            for (const auto& v : arr) theorems.push_back(v);
        }
    }
    if (opts.run_theorems && sgk && gk2 && roter && einstein) {
        Json arr = named_checks_json(verify_specialization_theorems(
            b, *sgk, *gk2, *roter, *einstein, eta ? &*eta : nullptr));
        for (const auto& v : arr) theorems.push_back(v);
    }
    out["theorems"] = theorems;

    out["excluded_loci"] = loci;

    if (opts.numeric) {
        std::vector<std::vector<Rational>> pts = manifest.sample_points;
        auto extra = sample_points(b, opts.numeric_points, opts.numeric_seed);
        pts.insert(pts.end(), extra.begin(), extra.end());
        CrosscheckSummary cs = numeric_crosscheck(b, pts);
        Json j;
        j["points"] = cs.points_tested;
        j["max_rel_error"] = cs.max_rel_error;
        j["tolerance"] = cs.tolerance;
        j["ok"] = cs.ok;
        if (!cs.failures.empty()) j["failures"] = cs.failures;
        out["numeric_checks"] = j;
    }
    return out;
}

VerifyOutcome verify_suite(const Manifest& manifest, bool flip_riemann_sign) {
    VerifyOutcome out;
    const ChartPtr& chart = manifest.chart;
    int n = chart->dimension;
    MetricData md = build_metric(chart, manifest.metric_tensor());
    CurvatureBundle b = compute_curvature(std::move(md), flip_riemann_sign);
    auto add = [&](std::string name, bool pass, std::string note = "") {
        out.checks.push_back({std::move(name), pass, true, std::move(note)});
        out.all_pass = out.all_pass && pass;
    };

    // Metric inverse is exact by construction; check anyway.
    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                RationalFunction acc(n);
                for (int k = 0; k < n; ++k) acc += b.g().at({i, k}) * b.g_inv().at({k, j});
                RationalFunction expect =
                    i == j ? RationalFunction::one(n) : RationalFunction::zero(n);
                ok = (acc - expect).is_zero();
            }
        add("metric_inverse_exact", ok);
    }

    add("riemann_symmetries", b.riemann.symmetry_valid());

    {
        bool ok = true;
        for (int h = 0; h < n && ok; ++h)
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    for (int k = 0; k < n && ok; ++k)
                        ok = (b.riemann.at({h, i, j, k}) + b.riemann.at({i, j, h, k}) +
                              b.riemann.at({j, h, i, k}))
                                 .is_zero();
        add("first_bianchi", ok);
    }

    {
        bool ok = true;
        for (int h = 0; h < n && ok; ++h)
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    for (int k = 0; k < n && ok; ++k)
                        for (int l = 0; l < n && ok; ++l)
                            ok = (b.nabla_r.at({h, i, j, k, l}) +
                                  b.nabla_r.at({i, l, j, k, h}) +
                                  b.nabla_r.at({l, h, j, k, i}))
                                     .is_zero();
        add("second_bianchi", ok);
    }

    add("nabla_g_zero", covariant_derivative(b.g(), b.gamma).is_zero());
    add("r_dot_g_zero", curvature_action(b.riemann, b.g(), b.g_inv()).is_zero());

    {
        // Contracted second Bianchi: g^{ij} (nabla S)_{jl,i} = (d kappa)_l / 2.
        bool ok = true;
        for (int l = 0; l < n && ok; ++l) {
            RationalFunction acc(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (b.g_inv().at({i, j}).is_zero()) continue;
                    acc += b.g_inv().at({i, j}) * b.nabla_s.at({j, l, i});
                }
            ok = (acc - b.dscalar.at({l}).scaled(Rational(1, 2))).is_zero();
        }
        add("contracted_second_bianchi", ok);
    }

    {
        Tensor C = derived_tensor(DerivedKind::Conformal, b);
        add("conformal_trace_free", contract(C, 0, 3, b.g_inv()).is_zero());
        Tensor K = derived_tensor(DerivedKind::Conharmonic, b);
        Tensor gg = kulkarni_nomizu(b.g(), b.g());
        RationalFunction c =
            b.scalar.scaled(Rational(1, 2 * static_cast<long>(n - 1) * (n - 2)));
        add("conformal_conharmonic_relation", (C - K - gg.scaled(c)).is_zero());
    }

    {
        // Wedge derivation rules on a deterministic polynomial tensor.
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> coeff(-3, 3);
        Tensor A(chart, 2, Symmetry::Symmetric2);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Polynomial p(n);
                for (int v = 0; v < n; ++v) {
                    Exponents e(n, 0);
                    e[v] = 1;
                    p += Polynomial::monomial(n, e, make_rational(coeff(rng)));
                    e[v] = 2;
                    p += Polynomial::monomial(n, e, make_rational(coeff(rng)));
                }
                p += Polynomial::constant(n, make_rational(coeff(rng)));
                RationalFunction v(p);
                A.at({i, j}) = v;
                A.at({j, i}) = v;
            }
        Tensor gA = kulkarni_nomizu(b.g(), A);
        Tensor nabla_gA = covariant_derivative(gA, b.gamma);
        Tensor nabla_A = covariant_derivative(A, b.gamma);
        add("wedge_commutes_with_derivative", (nabla_gA - wedge_2_with_k(b.g(), nabla_A)).is_zero());
        Tensor r_gA = curvature_action(b.riemann, gA, b.g_inv());
        Tensor r_A = curvature_action(b.riemann, A, b.g_inv());
        add("wedge_commutes_with_curvature_action",
            (r_gA - wedge_2_with_k(b.g(), r_A)).is_zero());
    }

    if (golden::is_golden_metric(b)) {
        bool ok = true;
        std::string bad;
        auto check4 = [&](const Tensor& t, const std::vector<golden::Component4>& comps,
                          const char* what) {
            for (const auto& c : comps) {
                RationalFunction expect = parse_expression(c.expr, *chart);
                if (t.at({c.idx[0] - 1, c.idx[1] - 1, c.idx[2] - 1, c.idx[3] - 1}) != expect) {
                    ok = false;
                    bad = what;
                }
            }
        };
        check4(b.riemann, golden::riemann(), "R");
        for (const auto& c : golden::ricci()) {
            RationalFunction expect = parse_expression(c.expr, *chart);
            if (b.ricci.at({c.idx[0] - 1, c.idx[1] - 1}) != expect) {
                ok = false;
                bad = "S";
            }
        }
        for (const auto& c : golden::nabla_riemann()) {
            RationalFunction expect = parse_expression(c.expr, *chart);
            if (b.nabla_r.at({c.idx[0] - 1, c.idx[1] - 1, c.idx[2] - 1, c.idx[3] - 1,
                              c.idx[4] - 1}) != expect) {
                ok = false;
                bad = "nabla_R";
            }
        }
        add("golden_component_tables", ok, bad.empty() ? "" : ("first mismatch in " + bad));
    }

    {
        CurvatureBundle probe = compute_curvature(
            build_metric(chart, manifest.metric_tensor()), flip_riemann_sign);
        auto pts = sample_points(probe, 5, 99);
        CrosscheckSummary cs = numeric_crosscheck(probe, pts);
        std::ostringstream note;
        note << "max relative error " << cs.max_rel_error << " over " << cs.points_tested
             << " points";
        add("numeric_oracle", cs.ok && cs.points_tested >= 5, note.str());
    }
    return out;
}

Json eval_point(const Manifest& manifest, const std::string& tensor_name,
                const std::vector<Rational>& point) {
    const ChartPtr& chart = manifest.chart;
    int n = chart->dimension;
    if (static_cast<int>(point.size()) != n)
        throw ManifestError("point length does not match chart dimension");
    MetricData md = build_metric(chart, manifest.metric_tensor());
    CurvatureBundle b = compute_curvature(std::move(md));

    Json out;
    out["tensor"] = tensor_name;
    Json pj = Json::array();
    for (const auto& q : point) pj.push_back(rational_str(q));
    out["point"] = pj;

    auto table_at = [&](const Tensor& t, int split_last = 0) {
        Json table = Json::object();
        t.for_each_index([&](std::span<const int> idx, std::size_t fl) {
            if (t[fl].is_zero()) return;
            table[idx_key(idx, split_last)] = rational_str(t[fl].evaluate(point));
        });
        return table;
    };

    if (tensor_name == "metric") out["components"] = table_at(b.g());
    else if (tensor_name == "inverse") out["components"] = table_at(b.g_inv());
    else if (tensor_name == "riemann") out["components"] = table_at(b.riemann);
    else if (tensor_name == "ricci") out["components"] = table_at(b.ricci);
    else if (tensor_name == "scalar") out["value"] = rational_str(b.scalar.evaluate(point));
    else if (tensor_name == "nabla_riemann") out["components"] = table_at(b.nabla_r, 1);
    else if (tensor_name == "nabla_ricci") out["components"] = table_at(b.nabla_s, 1);
    else if (tensor_name == "g_wedge_g")
        out["components"] = table_at(kulkarni_nomizu(b.g(), b.g()));
    else if (tensor_name == "g_wedge_s")
        out["components"] = table_at(kulkarni_nomizu(b.g(), b.ricci));
    else if (tensor_name == "s_wedge_s")
        out["components"] = table_at(kulkarni_nomizu(b.ricci, b.ricci));
    else if (tensor_name == "conformal")
        out["components"] = table_at(derived_tensor(DerivedKind::Conformal, b));
    else if (tensor_name == "projective")
        out["components"] = table_at(derived_tensor(DerivedKind::Projective, b));
    else if (tensor_name == "concircular")
        out["components"] = table_at(derived_tensor(DerivedKind::Concircular, b));
    else if (tensor_name == "conharmonic")
        out["components"] = table_at(derived_tensor(DerivedKind::Conharmonic, b));
    else
        throw ManifestError("unknown tensor name '" + tensor_name + "'");
    return out;
}

} // namespace recurv
