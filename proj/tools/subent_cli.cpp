// Command-line front end: evaluate, differentiate, verify, bound,
// reconstruct, and estimate. One JSON object per invocation on stdout;
// human-readable messages go to stderr.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subent/bernstein.hpp"
#include "subent/contour.hpp"
#include "subent/direct.hpp"
#include "subent/haar.hpp"
#include "subent/halfaxis.hpp"
#include "subent/identities.hpp"
#include "subent/suites.hpp"

using json = nlohmann::ordered_json;
using namespace subent;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitQuadrature = 4;
constexpr int kExitDivergent = 5;
constexpr int kExitVerifyBase = 10;

struct CommonOptions {
    std::string format = "json";
    std::string base = "e";
    int threads = 1;
    bool timings = false;
};

std::vector<double> parse_csv(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("malformed number: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("empty list");
    return out;
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_csv(text)) {
        int k = static_cast<int>(v);
        if (k != v) throw CLI::ValidationError("index list must be integers");
        out.push_back(k);
    }
    return out;
}

json report_to_json(const VerificationReport& r) {
    return json{{"identity", r.identity_name}, {"samples", r.samples},
                {"max_residual", r.max_residual}, {"tolerance", r.tolerance},
                {"pass", r.pass}, {"worst_witness", r.worst_witness}};
}

void flatten(const json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, node.dump());
    }
}

void emit(const json& record, const CommonOptions& common) {
    if (common.format == "csv") {
        std::vector<std::pair<std::string, std::string>> cells;
        flatten(record, "", cells);
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << (i ? "," : "") << cells[i].first;
        std::cout << "\n";
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << (i ? "," : "") << cells[i].second;
        std::cout << "\n";
    } else {
        std::cout << record.dump() << "\n";
    }
}

double display_entropy(double nats, const CommonOptions& common) {
    return common.base == "2" ? nats / std::log(2.0) : nats;
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

int cmd_eval(const std::string& xs, const std::string& es, const CommonOptions& common) {
    Stopwatch watch;
    json inputs;
    json results;
    json diagnostics;

    std::vector<double> hvals;
    std::vector<double> qvals;
    auto push = [](std::vector<double>& v, double x) { v.push_back(x); };

    SymPolyPoint e{1.0};
    bool have_x = !xs.empty();
    if (have_x) {
        ProbVector x(parse_csv(xs));
        inputs["x"] = x.values();
        e = elementary_symmetric(x);
        results["H_direct"] = entropy_direct(x);
        results["Q_direct"] = subentropy_direct(x);
        push(hvals, entropy_direct(x));
        push(qvals, subentropy_direct(x));
    } else {
        e = SymPolyPoint(parse_csv(es));
    }
    inputs["e"] = e.coeffs();

    QuadratureDiagnostics qe, ql, qq;
    results["H_halfaxis"] = entropy_e(e, {}, &qe);
    results["H_logform"] = entropy_e_log_form(e, {}, &ql);
    results["Q_halfaxis"] = subentropy_e(e, {}, &qq);
    push(hvals, results["H_halfaxis"].get<double>());
    push(hvals, results["H_logform"].get<double>());
    push(qvals, results["Q_halfaxis"].get<double>());
    diagnostics["quadrature_panels"] = json{{"H_halfaxis", qe.panels}, {"H_logform", ql.panels},
                                            {"Q_halfaxis", qq.panels}};

    if (!have_x) {
        // Recover x when the e-point lies over real non-negative roots.
        try {
            RootSet rs = roots_from_symmetric(e);
            if (rs.classification == RootClassification::AllRealNonNegative) {
                std::vector<double> x;
                for (const auto& z : rs.roots) x.push_back(std::max(0.0, z.real()));
                ProbVector xv(x);
                inputs["roots"] = x;
                results["H_direct"] = entropy_direct(xv);
                results["Q_direct"] = subentropy_direct(xv);
                push(hvals, entropy_direct(xv));
                push(qvals, subentropy_direct(xv));
            }
        } catch (const ConvergenceFailure&) {
        }
    }
    try {
        ContourDiagnostics ch, cq;
        ContourSpec spec = auto_contour(e, 512);
        results["H_contour"] = entropy_contour(e, spec, &ch);
        results["Q_contour"] = subentropy_contour(e, spec, &cq);
        push(hvals, results["H_contour"].get<double>());
        push(qvals, results["Q_contour"].get<double>());
        diagnostics["contour"] = json{{"center", spec.center}, {"radius", spec.radius},
                                      {"nodes", spec.nodes},
                                      {"imag_residual_H", ch.imag_residual},
                                      {"imag_residual_Q", cq.imag_residual}};
    } catch (const ContourViolation& ex) {
        diagnostics["contour"] = json{{"skipped", ex.what()}};
    } catch (const ConvergenceFailure& ex) {
        diagnostics["contour"] = json{{"skipped", ex.what()}};
    }

    double dh = 0.0, dq = 0.0;
    for (std::size_t i = 0; i < hvals.size(); ++i)
        for (std::size_t j = i + 1; j < hvals.size(); ++j)
            dh = std::max(dh, std::abs(hvals[i] - hvals[j]));
    for (std::size_t i = 0; i < qvals.size(); ++i)
        for (std::size_t j = i + 1; j < qvals.size(); ++j)
            dq = std::max(dq, std::abs(qvals[i] - qvals[j]));
    results["H_max_delta"] = dh;
    results["Q_max_delta"] = dq;

    if (common.base == "2") {
        for (auto& [key, value] : results.items()) {
            if (key.rfind("H_", 0) == 0 || key.rfind("Q_", 0) == 0)
                value = display_entropy(value.get<double>(), common);
        }
    }

    json record{{"command", "eval"}, {"inputs", inputs}, {"results", results},
                {"diagnostics", diagnostics}};
    if (common.timings) record["diagnostics"]["runtime_ms"] = watch.ms();
    emit(record, common);
    return 0;
}

// Tensor-product central finite difference of H or Q along the index; used
// as the displayed cross-check. Step per direction, second-order accurate.
double tensor_fd(const SymPolyPoint& e, const std::vector<int>& ks, bool entropy) {
    QuadratureConfig tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-14;
    tight.max_subdivisions = 500;
    auto value = [&](const std::vector<double>& coeffs) {
        SymPolyPoint p(coeffs);
        return entropy ? entropy_e(p, tight) : subentropy_e(p, tight);
    };
    std::vector<double> base = e.coeffs();
    double h = ks.size() == 1 ? 1e-4 : 5e-4;
    std::function<double(std::size_t, std::vector<double>&)> recurse =
        [&](std::size_t level, std::vector<double>& coeffs) -> double {
        if (level == ks.size()) return value(coeffs);
        int k = ks[level];
        double step = h * (1.0 + coeffs[static_cast<std::size_t>(k - 1)]);
        double& slot = coeffs[static_cast<std::size_t>(k - 1)];
        double saved = slot;
        if (saved - step < 0.0) {
            // One-sided second-order stencil at the cone boundary.
            slot = saved;
            double f0 = recurse(level + 1, coeffs);
            slot = saved + step;
            double f1 = recurse(level + 1, coeffs);
            slot = saved + 2.0 * step;
            double f2 = recurse(level + 1, coeffs);
            slot = saved;
            return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * step);
        }
        slot = saved + step;
        double fp = recurse(level + 1, coeffs);
        slot = saved - step;
        double fm = recurse(level + 1, coeffs);
        slot = saved;
        return (fp - fm) / (2.0 * step);
    };
    std::vector<double> coeffs = base;
    return recurse(0, coeffs);
}

int cmd_grad(const std::string& es, const std::string& order, const CommonOptions& common) {
    Stopwatch watch;
    SymPolyPoint e(parse_csv(es));
    MultiIndex idx(parse_csv_ints(order));
    idx.validate(e.dim());

    json inputs{{"e", e.coeffs()}, {"order", idx.indices()}};
    json results;
    json diagnostics;
    bool divergent = false;

    const int m = idx.order();
    const int K = idx.sum();
    const double e1 = e.e(1);

    QuadratureDiagnostics dgh, dgq;
    try {
        results["dH"] = dH(e, idx, {}, &dgh);
        diagnostics["dH_panels"] = dgh.panels;
    } catch (const DivergentIntegral& ex) {
        results["dH"] = json{{"divergent", true}, {"direction", ex.direction}, {"reason", ex.what()}};
        divergent = true;
    }
    try {
        results["dQ"] = dQ(e, idx, {}, &dgq);
        diagnostics["dQ_panels"] = dgq.panels;
    } catch (const DivergentIntegral& ex) {
        results["dQ"] = json{{"divergent", true}, {"direction", ex.direction}, {"reason", ex.what()}};
        divergent = true;
    }

    // c-bound when applicable (signed derivative against the comparison
    // polynomial at the repeated-point first coordinate).
    try {
        if (m == 1 && K >= 2) {
            results["c_bound_H"] = c_bound(e.dim(), K, e1);
            results["c_bound_Q"] = c_bound(2 * e.dim(), K, 2.0 * e1);
        } else if (m >= 2) {
            results["c_bound_H"] = c_bound(m * e.dim(), K, m * e1);
            results["c_bound_Q"] = c_bound((m + 1) * e.dim(), K, (m + 1) * e1);
        }
        if (results.contains("c_bound_H") && results["dH"].is_number()) {
            double sign = (m % 2 == 1) ? 1.0 : -1.0;
            results["slack_H"] = sign * results["dH"].get<double>() - results["c_bound_H"].get<double>();
        }
        if (results.contains("c_bound_Q") && results["dQ"].is_number()) {
            double sign = (m % 2 == 1) ? 1.0 : -1.0;
            results["slack_Q"] = sign * results["dQ"].get<double>() - results["c_bound_Q"].get<double>();
        }
    } catch (const DomainViolation&) {
    }

    if (m <= 3 && !divergent) {
        results["fd_cross_check_H"] = tensor_fd(e, idx.indices(), true);
        results["fd_cross_check_Q"] = tensor_fd(e, idx.indices(), false);
    }

    json record{{"command", "grad"}, {"inputs", inputs}, {"results", results},
                {"diagnostics", diagnostics}};
    if (common.timings) record["diagnostics"]["runtime_ms"] = watch.ms();
    emit(record, common);
    return divergent ? kExitDivergent : 0;
}

int cmd_verify(const std::string& suite, int d, int samples, std::uint64_t seed,
               double tol, bool tol_set, const CommonOptions& common) {
    Stopwatch watch;
    SuiteConfig cfg;
    cfg.d = d;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.threads = common.threads;
    if (tol_set) cfg.tol_override = tol;

    std::vector<VerificationReport> reports;
    if (suite == "all") {
        reports = run_all_suites(cfg);
    } else {
        if (!suite_registered(suite)) {
            std::cerr << "unknown suite: " << suite << "\n";
            return kExitParse;
        }
        reports = run_suite(suite, cfg);
    }

    int failures = 0;
    json rj = json::array();
    for (const auto& r : reports) {
        rj.push_back(report_to_json(r));
        if (!r.pass) ++failures;
    }
    json record{{"command", "verify"},
                {"inputs", json{{"suite", suite}, {"d", d}, {"samples", samples},
                                {"seed", seed}, {"threads", common.threads},
                                {"registry_version", kRegistryVersion}}},
                {"results", json{{"reports", rj}, {"all_pass", failures == 0}}},
                {"diagnostics", json::object()}};
    if (common.timings) record["diagnostics"]["runtime_ms"] = watch.ms();
    emit(record, common);
    return failures == 0 ? 0 : kExitVerifyBase + failures;
}

int cmd_bounds(double e1, double e2, int d, const CommonOptions& common) {
    Stopwatch watch;
    UpperBounds ub = hq_upper_bounds(e1, e2, d);
    json record{{"command", "bounds"},
                {"inputs", json{{"e1", e1}, {"e2", e2}, {"d", d}}},
                {"results", json{{"a", ub.ab.a}, {"b", ub.ab.b},
                                 {"H_bound", ub.H_bound}, {"Q_bound", ub.Q_bound},
                                 {"HU_bound", ub.HU_bound},
                                 {"HQ_diff_lower_bound", d * e2 / ((d - 1) * e1)}}},
                {"diagnostics", json::object()}};
    if (common.timings) record["diagnostics"]["runtime_ms"] = watch.ms();
    emit(record, common);
    return 0;
}

int cmd_haar(int dim, const std::string& eigs, long long samples, std::uint64_t seed,
             const CommonOptions& common) {
    Stopwatch watch;
    HaarConfig cfg{dim, parse_csv(eigs), samples, seed};
    HaarEstimate est = estimate_Q(cfg, common.threads);
    json record{{"command", "haar"},
                {"inputs", json{{"dim", dim}, {"eigs", cfg.eigenvalues},
                                {"samples", samples}, {"seed", seed}}},
                {"results", json{{"mean_HM", est.mean_HM}, {"std_error", est.std_error},
                                 {"implied_Q", est.implied_Q}, {"reference_Q", est.reference_Q},
                                 {"z_score", est.z_score}}},
                {"diagnostics", json::object()}};
    if (common.timings) record["diagnostics"]["runtime_ms"] = watch.ms();
    emit(record, common);
    return std::abs(est.z_score) < 4.0 ? 0 : 1;
}

int cmd_lk(const std::string& es, int grid, const std::string& out_path,
           const CommonOptions& common) {
    Stopwatch watch;
    SymPolyPoint e(parse_csv(es));
    json results;
    double h_rec = lk_reconstruct_H(e);
    double q_rec = lk_reconstruct_Q(e);
    results["H_reconstructed"] = h_rec;
    results["Q_reconstructed"] = q_rec;
    results["H_halfaxis_delta"] = std::abs(h_rec - entropy_e(e));
    results["Q_halfaxis_delta"] = std::abs(q_rec - subentropy_e(e));

    if (!out_path.empty()) {
        std::ofstream csv(out_path);
        if (!csv) throw DomainViolation("cannot open output file: " + out_path);
        csv << "r,t_d,weight_H,weight_Q\n";
        char line[128];
        for (int i = 0; i < grid; ++i) {
            double lr = -3.0 + 6.0 * i / std::max(1, grid - 1);
            double r = std::pow(10.0, lr);
            for (int j = 0; j < grid; ++j) {
                double lt = -3.0 + 6.0 * j / std::max(1, grid - 1);
                double t = std::pow(10.0, lt);
                LKSurfacePoint p{r, t};
                std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", r, t,
                              lk_density_H(p, e.dim()), lk_density_Q(p, e.dim()));
                csv << line;
            }
        }
        results["density_csv"] = out_path;
        results["density_rows"] = grid * grid;
    }

    json record{{"command", "lk"}, {"inputs", json{{"e", e.coeffs()}, {"grid", grid}}},
                {"results", results}, {"diagnostics", json::object()}};
    if (common.timings) record["diagnostics"]["runtime_ms"] = watch.ms();
    emit(record, common);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy and subentropy in elementary symmetric polynomial coordinates"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--base", common.base, "entropy display base")->check(CLI::IsMember({"e", "2"}));
    app.add_option("--threads", common.threads, "worker cap for batch commands")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timings", common.timings, "include runtimes in diagnostics");

    std::string xs, es, order, suite = "all", eigs, out_path;
    int d = 3, samples = 0, grid = 0, dim = 2;
    long long haar_samples = 100000;
    std::uint64_t seed = 42;
    double e1 = 1.0, e2 = 0.0, tol = 0.0;

    auto* eval = app.add_subcommand("eval", "evaluate H and Q from all applicable evaluators");
    auto* opt_x = eval->add_option("--x", xs, "probability-like vector x1,x2,...");
    auto* opt_e = eval->add_option("--e", es, "symmetric polynomial point e1,e2,...");
    opt_x->excludes(opt_e);

    auto* gradc = app.add_subcommand("grad", "mixed partial derivatives of H and Q");
    gradc->add_option("--e", es, "symmetric polynomial point")->required();
    gradc->add_option("--order", order, "derivative index k1,k2,...")->required();

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    // Suites are desk-scale: the direct-formula cross checks lose accuracy
    // beyond d ~ 8 (the evaluators themselves go to d = 32).
    verify->add_option("--d", d, "dimension")->check(CLI::Range(1, 8));
    verify->add_option("--samples", samples, "samples per suite (default: registry value)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");
    auto* tol_opt = verify->add_option("--tol", tol, "tolerance override");

    auto* bounds = app.add_subcommand("bounds", "optimal (e1, e2) upper bounds");
    bounds->add_option("--e1", e1)->required();
    bounds->add_option("--e2", e2)->required();
    bounds->add_option("--d", d)->required()->check(CLI::Range(2, 32));

    auto* haar = app.add_subcommand("haar", "Monte Carlo check of the measurement-average identity");
    haar->add_option("--dim", dim)->required()->check(CLI::Range(2, 32));
    haar->add_option("--eigs", eigs, "eigenvalues, must sum to 1")->required();
    haar->add_option("--samples", haar_samples)->check(CLI::PositiveNumber);
    haar->add_option("--seed", seed);

    auto* lk = app.add_subcommand("lk", "Levy-Khintchine reconstruction and density export");
    lk->add_option("--e", es, "symmetric polynomial point with e1 = 1")->required();
    lk->add_option("--grid", grid, "density grid resolution")->check(CLI::PositiveNumber);
    lk->add_option("--out", out_path, "density CSV path");

    // Global flags (--format, --threads, ...) may follow the subcommand.
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex);  // --help
        std::cerr << ex.what() << "\n";
        return kExitParse;
    }

    try {
        if (eval->parsed()) {
            if (xs.empty() == es.empty()) {
                std::cerr << "eval requires exactly one of --x or --e\n";
                return kExitParse;
            }
            return cmd_eval(xs, es, common);
        }
        if (gradc->parsed()) return cmd_grad(es, order, common);
        if (verify->parsed())
            return cmd_verify(suite, d, samples, seed, tol, tol_opt->count() > 0, common);
        if (bounds->parsed()) return cmd_bounds(e1, e2, d, common);
        if (haar->parsed()) return cmd_haar(dim, eigs, haar_samples, seed, common);
        if (lk->parsed()) {
            if (!out_path.empty() && grid == 0) grid = 64;
            return cmd_lk(es, grid, out_path, common);
        }
    } catch (const DomainViolation& ex) {
        std::cerr << "domain violation: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const ContourViolation& ex) {
        std::cerr << "contour violation: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const NotComparable& ex) {
        std::cerr << "not comparable: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const QuadratureFailure& ex) {
        std::cerr << "quadrature failure: " << ex.what() << "\n";
        return kExitQuadrature;
    } catch (const DivergentIntegral& ex) {
        std::cerr << "divergent integral: " << ex.what() << "\n";
        return kExitDivergent;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << "\n";
        return kExitParse;
    } catch (const std::runtime_error& ex) {
        std::cerr << ex.what() << "\n";
        return kExitQuadrature;
    }
    return 0;
}
