#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "recurv/corpus.hpp"
#include "recurv/report.hpp"

namespace {

// Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
// 3 degenerate input.
enum ExitCode { kOk = 0, kUsage = 1, kVerifyFail = 2, kDegenerate = 3 };

recurv::Manifest load_or_corpus(const std::string& path) {
    for (const auto& name : recurv::corpus_names())
        if (name == path) return recurv::corpus_manifest(name);
    return recurv::load_manifest(path);
}

std::vector<recurv::Rational> parse_point_csv(const std::string& csv) {
    std::vector<recurv::Rational> pt;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        pt.push_back(recurv::rational_from_string(item));
    return pt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curvature-structure classifier for rational metrics"};
    app.require_subcommand(1);

    std::string manifest_path, json_out, tensor_name = "r", point_csv, structures_csv;
    int points = 5;
    double step = 1e-4, tol = 1e-6;
    unsigned seed = 1234;
    bool flip_sign = false;

    CLI::App* analyze = app.add_subcommand("analyze", "run detectors and emit a report");
    analyze->add_option("manifest", manifest_path, "manifest file or corpus name")->required();
    analyze->add_option("--structures", structures_csv,
                        "comma list: k,sk,gk2,sgk,hgk,wgk,qgk,roter,einstein,semisym");
    analyze->add_option("--tensor", tensor_name, "family tensor: r|c|p|w|k");
    analyze->add_option("--json", json_out, "write the JSON report to this path");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant battery");
    verify->add_option("manifest", manifest_path, "manifest file or corpus name")->required();
    verify->add_flag("--flip-riemann-sign", flip_sign,
                     "negative control: flip the curvature sign convention");

    CLI::App* crosscheck = app.add_subcommand("crosscheck", "numeric finite-difference oracle");
    crosscheck->add_option("manifest", manifest_path, "manifest file or corpus name")->required();
    crosscheck->add_option("--points", points, "number of sample points");
    crosscheck->add_option("--step", step, "finite-difference step");
    crosscheck->add_option("--tol", tol, "relative tolerance");
    crosscheck->add_option("--seed", seed, "sample-point seed");

    CLI::App* eval = app.add_subcommand("eval", "print exact component values at a point");
    eval->add_option("manifest", manifest_path, "manifest file or corpus name")->required();
    eval->add_option("--tensor", tensor_name, "tensor name (riemann, ricci, scalar, ...)")
        ->required();
    eval->add_option("--point", point_csv, "comma-separated rational coordinates")->required();

    CLI::App* corpus = app.add_subcommand("corpus", "bundled example metrics");
    std::string corpus_cmd, corpus_name;
    corpus->add_option("action", corpus_cmd, "list | show")->required();
    corpus->add_option("name", corpus_name, "corpus entry name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (analyze->parsed()) {
            recurv::Manifest m = load_or_corpus(manifest_path);
            recurv::AnalyzeOptions opts;
            if (!structures_csv.empty()) {
                std::stringstream ss(structures_csv);
                std::string item;
                while (std::getline(ss, item, ',')) opts.structures.insert(item);
            }
            if (tensor_name.size() != 1 ||
                std::string("rcpwk").find(tensor_name[0]) == std::string::npos)
                throw recurv::ManifestError("--tensor must be one of r|c|p|w|k");
            opts.tensor = tensor_name[0];
            recurv::Json report = recurv::analyze(m, opts);
            std::string text = report.dump(2) + "\n";
            if (!json_out.empty()) {
                std::ofstream out(json_out, std::ios::binary);
                out << text;
            } else {
                std::cout << text;
            }
            bool numeric_ok = !report.contains("numeric_checks") ||
                              report["numeric_checks"]["ok"].get<bool>();
            return numeric_ok ? kOk : kVerifyFail;
        }
        if (verify->parsed()) {
            recurv::Manifest m = load_or_corpus(manifest_path);
            recurv::VerifyOutcome out = recurv::verify_suite(m, flip_sign);
            for (const auto& c : out.checks)
                std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                          << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
            std::cout << (out.all_pass ? "verify: all checks passed"
                                       : "verify: FAILURES present")
                      << "\n";
            return out.all_pass ? kOk : kVerifyFail;
        }
        if (crosscheck->parsed()) {
            recurv::Manifest m = load_or_corpus(manifest_path);
            recurv::MetricData md = recurv::build_metric(m.chart, m.metric_tensor());
            recurv::CurvatureBundle b = recurv::compute_curvature(std::move(md));
            auto pts = m.sample_points;
            auto extra = recurv::sample_points(b, points, seed);
            pts.insert(pts.end(), extra.begin(), extra.end());
            recurv::CrosscheckSummary cs = recurv::numeric_crosscheck(b, pts, step, tol);
            std::cout << "points tested: " << cs.points_tested << "\n";
            std::cout << "max relative error: " << cs.max_rel_error << "\n";
            std::cout << "tolerance: " << cs.tolerance << "\n";
            for (const auto& f : cs.failures) std::cout << "FAIL " << f << "\n";
            std::cout << (cs.ok ? "crosscheck: ok" : "crosscheck: FAILED") << "\n";
            return cs.ok ? kOk : kVerifyFail;
        }
        if (eval->parsed()) {
            recurv::Manifest m = load_or_corpus(manifest_path);
            recurv::Json out = recurv::eval_point(m, tensor_name, parse_point_csv(point_csv));
            std::cout << out.dump(2) << "\n";
            return kOk;
        }
        if (corpus->parsed()) {
            if (corpus_cmd == "list") {
                for (const auto& name : recurv::corpus_names()) std::cout << name << "\n";
                return kOk;
            }
            if (corpus_cmd == "show") {
                if (corpus_name.empty())
                    throw recurv::ManifestError("corpus show needs an entry name");
                std::cout << recurv::corpus_text(corpus_name);
                return kOk;
            }
            throw recurv::ManifestError("corpus action must be list or show");
        }
    } catch (const recurv::DegenerateMetricError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kDegenerate;
    } catch (const recurv::PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kVerifyFail;
    } catch (const recurv::ManifestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const recurv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
