#include "subent/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "subent/bernstein.hpp"
#include "subent/contour.hpp"
#include "subent/direct.hpp"
#include "subent/haar.hpp"
#include "subent/halfaxis.hpp"
#include "subent/rng.hpp"

namespace subent {

namespace {

std::uint64_t suite_hash(const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

// Run fn(i) for i in [0, n) with results landing in index order; reductions
// afterwards are sequential, so the outcome is thread-count independent.
// Worker exceptions are rethrown in the caller.
template <typename F>
void par_for(int n, int threads, const F& fn) {
    if (threads <= 1 || n < 2) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::mutex mutex;
    std::exception_ptr failure;
    int chunk = (n + threads - 1) / threads;
    for (int lo = 0; lo < n; lo += chunk) {
        int hi = std::min(lo + chunk, n);
        pool.emplace_back([&fn, &mutex, &failure, lo, hi]() {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// --- samplers -------------------------------------------------------------

// Normalized vector with entries of bounded ratio and pairwise gaps of at
// least `min_gap`; keeps both the direct subentropy formula and the contour
// oracle well inside their accurate regimes. The gap shrinks with dimension
// (the sorted entries live in a span of roughly 0.8/d).
ProbVector sample_separated_simplex(Rng& rng, int d, double min_gap) {
    min_gap = std::min(min_gap, 0.5 / (d * std::max(1, d - 1)));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> x(static_cast<std::size_t>(d));
        double sum = 0.0;
        for (auto& v : x) {
            v = rng.uniform(0.5, 1.5);
            sum += v;
        }
        for (auto& v : x) v /= sum;
        std::vector<double> sorted = x;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            ok = ok && sorted[i + 1] - sorted[i] >= min_gap;
        if (ok) return ProbVector(x);
    }
    throw std::logic_error("separated simplex sampler failed to converge");
}

// Flat Dirichlet scaled by theta, entries bounded below after normalization;
// min_gap > 0 additionally separates the entries, which keeps the direct
// subentropy formula well conditioned.
ProbVector sample_scaled_positive(Rng& rng, int d, double theta_lo, double theta_hi,
                                  double min_entry = 0.02, double min_gap = 0.0) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> x = sample_simplex(rng, d);
        double lo = *std::min_element(x.begin(), x.end());
        if (lo < min_entry) continue;
        if (min_gap > 0.0) {
            std::vector<double> sorted = x;
            std::sort(sorted.begin(), sorted.end());
            bool ok = true;
            for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
                ok = ok && sorted[i + 1] - sorted[i] >= min_gap;
            if (!ok) continue;
        }
        double theta = rng.uniform(theta_lo, theta_hi);
        for (auto& v : x) v *= theta;
        return ProbVector(x);
    }
    throw std::logic_error("positive sampler failed to converge");
}

// One Robin Hood transfer: move mass from a richer entry to a poorer one;
// the result is majorized by the input.
std::vector<double> robin_hood(Rng& rng, std::vector<double> x) {
    int d = static_cast<int>(x.size());
    int i = static_cast<int>(rng.uniform01() * d) % d;
    int j = static_cast<int>(rng.uniform01() * d) % d;
    if (i == j) j = (j + 1) % d;
    if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(j)]) std::swap(i, j);
    double gap = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
    double t = rng.uniform01() * 0.5 * gap;
    x[static_cast<std::size_t>(i)] -= t;
    x[static_cast<std::size_t>(j)] += t;
    return x;
}

// --- suite bodies ----------------------------------------------------------

using SuiteFn = std::function<std::vector<VerificationReport>(const SuiteConfig&, double tol)>;

VerificationReport make_report(const std::string& name, double tol) {
    VerificationReport r;
    r.identity_name = name;
    r.tolerance = tol;
    return r;
}

// Fold per-sample sub-reports in index order.
VerificationReport reduce_samples(const std::string& name, double tol, int n, int threads,
                                  const std::function<VerificationReport(int, Rng&)>& body) {
    std::vector<VerificationReport> parts(static_cast<std::size_t>(n));
    std::uint64_t base = suite_hash(name);
    par_for(n, threads, [&](int i) {
        Rng rng = Rng::stream(base, static_cast<std::uint64_t>(i) * 1000003ULL + 17);
        parts[static_cast<std::size_t>(i)] = body(i, rng);
    });
    VerificationReport out = make_report(name, tol);
    for (const auto& p : parts) merge_report(out, p);
    return out;
}

std::vector<VerificationReport> suite_cross_oracle(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg](int, Rng& rng) {
        VerificationReport part = make_report("cross_oracle", 0.0);
        ProbVector x = sample_separated_simplex(rng, cfg.d, 0.012);
        SymPolyPoint e = elementary_symmetric(x);
        double h[4] = {entropy_direct(x), entropy_e(e), entropy_e_log_form(e),
                       entropy_contour(e, auto_contour(e, 512))};
        double q[3] = {subentropy_direct(x), subentropy_e(e),
                       subentropy_contour(e, auto_contour(e, 512))};
        double res = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) res = std::max(res, std::abs(h[a] - h[b]));
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) res = std::max(res, std::abs(q[a] - q[b]));
        fold_residual(part, res, "x=" + fmt(x[0]) + ",...");
        return part;
    };
    return {reduce_samples("cross_oracle", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_sum_identities(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.8);
        return check_sum_identities(elementary_symmetric(x), tol);
    };
    return {reduce_samples("sum_identities", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_duality(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.8);
        return check_HQ_duality(elementary_symmetric(x), tol);
    };
    return {reduce_samples("hq_duality", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_index_degeneracy(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        VerificationReport part = make_report("index_degeneracy", tol);
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.8);
        SymPolyPoint e = elementary_symmetric(x);
        for (int m = 2; m <= 3; ++m) {
            std::map<int, double> first_by_sum;
            for (const auto& idx : index_multisets(cfg.d, m)) {
                MultiIndex mi(idx);
                double v = dH(e, mi);
                auto it = first_by_sum.find(mi.sum());
                if (it == first_by_sum.end()) {
                    first_by_sum.emplace(mi.sum(), v);
                } else {
                    double res = std::abs(v - it->second) / std::max(1.0, std::abs(it->second));
                    fold_residual(part, res, "m=" + std::to_string(m) +
                                                 " K=" + std::to_string(mi.sum()));
                }
            }
        }
        if (part.samples == 0) fold_residual(part, 0.0, "no regroupable pairs");
        return part;
    };
    return {reduce_samples("index_degeneracy", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_derivative_bounds(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.8);
        return check_derivative_bounds(elementary_symmetric(x), 3, tol);
    };
    return {reduce_samples("derivative_bounds", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_de1_bound(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        VerificationReport part = make_report("de1_bound", tol);
        ProbVector x = sample_scaled_positive(rng, cfg.d, 1.0, 3.0);
        SymPolyPoint e = elementary_symmetric(x);
        double v = dH(e, MultiIndex{1});
        fold_residual(part, v + 1.0, "e1=" + fmt(e.e(1)));
        return part;
    };
    return {reduce_samples("de1_bound", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_hq_difference(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        VerificationReport part = make_report("hq_difference", tol);
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.8);
        SymPolyPoint e = elementary_symmetric(x);
        BoundReport br = hq_difference_bound(e);
        fold_residual(part, -br.slack, "e1=" + fmt(e.e(1)) + " bound=" + fmt(br.bound_value));
        double diff = entropy_e(e) - subentropy_e(e);
        double first = cfg.d >= 2 ? cfg.d * e.e(2) / ((cfg.d - 1) * e.e(1)) : 0.0;
        fold_residual(part, first - diff, "first-term");
        return part;
    };
    return {reduce_samples("hq_difference", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_scaling(const SuiteConfig& cfg, double tol) {
    const double exact_tol = std::min(tol, 1e-10);
    struct Pair {
        VerificationReport exact, ineq;
    };
    std::vector<Pair> parts(static_cast<std::size_t>(cfg.samples));
    std::uint64_t base = suite_hash("scaling");
    const double thetas[3] = {1.0, 1.5, 2.0};
    par_for(cfg.samples, cfg.threads, [&](int i) {
        Rng rng = Rng::stream(base, static_cast<std::uint64_t>(i));
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.5, 0.02, 0.004);
        Pair p{make_report("scaling_exact", exact_tol), make_report("scaling_e", tol)};
        double theta = (i % 4 == 3) ? 5.0 : thetas[i % 4];
        std::string witness = "theta=" + fmt(theta);

        double e1 = 0.0;
        std::vector<double> sx = x.values();
        for (auto& v : sx) e1 += v;
        for (auto& v : sx) v *= theta;
        ProbVector xs(sx);
        double corr = theta * e1 * std::log(theta);
        double H = entropy_direct(x), Hs = entropy_direct(xs);
        double Q = subentropy_direct(x), Qs = subentropy_direct(xs);
        fold_residual(p.exact, std::abs(Hs - (theta * H - corr)) / std::max(1.0, std::abs(Hs)),
                      witness + " H(theta x)");
        fold_residual(p.exact, std::abs(Qs - (theta * Q - corr)) / std::max(1.0, std::abs(Qs)),
                      witness + " Q(theta x)");
        fold_residual(p.exact,
                      std::abs((Qs - theta * Q) - (Hs - theta * H)) /
                          std::max(1.0, std::abs(Hs - theta * H)),
                      witness + " difference relation");

        SymPolyPoint e = elementary_symmetric(x);
        std::vector<double> ce = e.coeffs();
        for (auto& v : ce) v *= theta;
        SymPolyPoint te(ce);
        double He = entropy_e(e), Hte = entropy_e(te);
        double Qe = subentropy_e(e), Qte = subentropy_e(te);
        fold_residual(p.ineq, (Qte - theta * Qe) / std::max(1.0, std::abs(theta * Qe)),
                      witness + " Q(theta e)");
        fold_residual(p.ineq, (Hte - theta * He) / std::max(1.0, std::abs(theta * He)),
                      witness + " H(theta e)");
        parts[static_cast<std::size_t>(i)] = std::move(p);
    });
    VerificationReport exact = make_report("scaling_exact", exact_tol);
    VerificationReport ineq = make_report("scaling_e", tol);
    for (const auto& p : parts) {
        merge_report(exact, p.exact);
        merge_report(ineq, p.ineq);
    }
    return {exact, ineq};
}

std::vector<VerificationReport> suite_reduction(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int i, Rng& rng) {
        VerificationReport part = make_report("reduction", tol);
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.8, 1.2, 0.05);
        SymPolyPoint e = elementary_symmetric(x);
        int m = 2 + (i % 2);
        if (static_cast<long>(m) * cfg.d > 24) m = 2;  // keep the repeated point in range
        auto sets = index_multisets(cfg.d, m);
        const auto& idx = sets[static_cast<std::size_t>(rng.next() % sets.size())];
        MultiIndex mi(idx);

        std::vector<double> repeated;
        for (double v : x.values())
            for (int r = 0; r < m; ++r) repeated.push_back(v);
        SymPolyPoint etil = elementary_symmetric(ProbVector(repeated));

        // (-1)^{m-1} d^m H = (m-1)! dH~/de~_K: the repeated spectrum has
        // q~ = q^m, and each differentiation past the first brings down a
        // factor from the power of q.
        double flip = (m % 2 == 1) ? 1.0 : -1.0;
        double fact = 1.0;
        for (int r = 2; r < m; ++r) fact *= r;
        double lhs = flip * dH(e, mi);
        double rhs = fact * dH(etil, MultiIndex{std::vector<int>{mi.sum()}});
        fold_residual(part, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)),
                      "m=" + std::to_string(m) + " K=" + std::to_string(mi.sum()));
        return part;
    };
    return {reduce_samples("reduction", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_schur(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int i, Rng& rng) {
        std::vector<double> x = sample_simplex(rng, cfg.d);
        std::vector<double> y = x;
        int transfers = 1 + (i % 3);
        for (int t = 0; t < transfers; ++t) y = robin_hood(rng, y);
        return check_schur_concavity(ProbVector(x), ProbVector(y), tol);
    };
    return {reduce_samples("schur_concavity", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_bipartite(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        const int n = 2;
        std::vector<double> cells;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            cells = sample_simplex(rng, cfg.d * n);
            if (*std::min_element(cells.begin(), cells.end()) >= 1e-3) break;
        }
        std::vector<std::vector<double>> joint(static_cast<std::size_t>(cfg.d));
        for (int r = 0; r < cfg.d; ++r)
            joint[static_cast<std::size_t>(r)] = {cells[static_cast<std::size_t>(2 * r)],
                                                  cells[static_cast<std::size_t>(2 * r + 1)]};
        return check_bipartite(joint, tol);
    };
    return {reduce_samples("bipartite", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_majorant(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.8, 0.005);
        return check_majorant_dominance(x, tol);
    };
    return {reduce_samples("majorant_dominance", tol, cfg.samples, cfg.threads, body)};
}

std::vector<VerificationReport> suite_bound_attainment(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        VerificationReport part = make_report("bound_attainment", tol);
        ProbVector x = sample_scaled_positive(rng, cfg.d, 0.6, 1.8, 0.005);
        SymPolyPoint e = elementary_symmetric(x);
        UpperBounds ub = hq_upper_bounds(e.e(1), cfg.d >= 2 ? e.e(2) : 0.0, cfg.d);
        std::vector<double> canon(static_cast<std::size_t>(cfg.d), ub.ab.a);
        canon.back() = ub.ab.b;
        ProbVector cx(canon);
        std::string witness = "e1=" + fmt(e.e(1)) + " e2=" + fmt(cfg.d >= 2 ? e.e(2) : 0.0);
        fold_residual(part, std::abs(entropy_direct(cx) - ub.H_bound), witness + " H attained");
        fold_residual(part, std::abs(subentropy_direct(cx) - ub.Q_bound), witness + " Q attained");
        fold_residual(part, entropy_direct(x) - ub.H_bound, witness + " H validity");
        fold_residual(part, subentropy_direct(x) - ub.Q_bound, witness + " Q validity");
        return part;
    };
    std::vector<VerificationReport> out = {
        reduce_samples("bound_attainment", tol, cfg.samples, cfg.threads, body)};

    if (cfg.d == 2) {
        // For d = 2 the canonical set is the only preimage, so the bound has
        // zero slack across the admissible region.
        auto sweep = [](int i, Rng& rng) {
            VerificationReport part = make_report("bound_sweep_d2", 1e-9);
            (void)i;
            double e1 = rng.uniform(0.5, 2.0);
            double e2 = rng.uniform01() * 0.25 * e1 * e1;
            UpperBounds ub = hq_upper_bounds(e1, e2, 2);
            SymPolyPoint e{e1, e2};
            double slack_h = std::abs(ub.H_bound - entropy_e(e));
            double slack_q = std::abs(ub.Q_bound - subentropy_e(e));
            fold_residual(part, std::max(slack_h, slack_q),
                          "e1=" + fmt(e1) + " e2=" + fmt(e2));
            return part;
        };
        out.push_back(reduce_samples("bound_sweep_d2", 1e-9, cfg.samples, cfg.threads, sweep));
    }
    return out;
}

std::vector<VerificationReport> suite_pick(const SuiteConfig& cfg, double tol) {
    VerificationReport all = make_report("pick", tol);
    for (int k = 2; k <= cfg.d; ++k) {
        Rng rng = Rng::stream(suite_hash("pick"), static_cast<std::uint64_t>(k));
        std::vector<cplx> grid;
        for (int i = 0; i < cfg.samples; ++i) {
            double modulus = std::pow(10.0, rng.uniform(-2.0, 1.0));
            double phase = rng.uniform(0.05 * M_PI, 0.95 * M_PI);
            grid.emplace_back(modulus * std::cos(phase), modulus * std::sin(phase));
        }
        VerificationReport r = pick_sweep(cfg.d, k, grid);
        merge_report(all, r);
    }
    return {all};
}

std::vector<VerificationReport> suite_complete_monotonicity(const SuiteConfig& cfg, double tol) {
    VerificationReport all = make_report("complete_monotonicity", tol);
    QuadratureConfig tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-14;
    tight.max_subdivisions = 500;

    // Base point: maximally mixed image, strictly inside the cone.
    std::vector<double> base(static_cast<std::size_t>(cfg.d), 1.0 / cfg.d);
    SymPolyPoint e0 = elementary_symmetric(ProbVector(base));

    auto fold_cm = [&all](const CmReport& r) {
        double residual = 0.0;
        if (r.hard_failures > 0) {
            for (double sd : r.signed_differences) residual = std::max(residual, -sd);
        }
        std::string witness = r.target + " (inconclusive=" + std::to_string(r.inconclusive) + ")";
        fold_residual(all, residual, witness);
    };

    for (int k = 2; k <= cfg.d; ++k) {
        auto at_ek = [&e0, k](double t) {
            std::vector<double> c = e0.coeffs();
            c[static_cast<std::size_t>(k - 1)] = t;
            return SymPolyPoint(c);
        };
        double ek0 = e0.e(k);
        fold_cm(check_complete_monotonicity(
            [&, k](double t) { return dH(at_ek(t), MultiIndex{std::vector<int>{k}}, tight); },
            ek0, 4, "dH/de_" + std::to_string(k)));
        fold_cm(check_complete_monotonicity(
            [&, k](double t) { return dQ(at_ek(t), MultiIndex{std::vector<int>{k}}, tight); },
            ek0, 4, "dQ/de_" + std::to_string(k)));
        fold_cm(check_complete_monotonicity(
            [&, k](double t) { return std::exp(-entropy_e(at_ek(t), tight)); }, ek0, 4,
            "exp(-H) along e_" + std::to_string(k)));
        fold_cm(check_complete_monotonicity(
            [&, k](double t) { return std::exp(-subentropy_e(at_ek(t), tight)); }, ek0, 4,
            "exp(-Q) along e_" + std::to_string(k)));
        for (int m = 2; m <= 3; ++m) {
            fold_cm(check_complete_monotonicity(
                [&, k, m](double t) { return std::exp(-entropy_e(at_ek(t), tight) / m); }, ek0,
                4, "exp(-H/" + std::to_string(m) + ") along e_" + std::to_string(k)));
        }
    }
    return {all};
}

std::vector<VerificationReport> suite_lk_reconstruct(const SuiteConfig& cfg, double tol) {
    auto body = [&cfg, tol](int, Rng& rng) {
        VerificationReport part = make_report("lk_reconstruct", tol);
        ProbVector x = sample_scaled_positive(rng, cfg.d, 1.0, 1.0);  // e_1 = 1
        SymPolyPoint e = elementary_symmetric(x);
        double dh = std::abs(lk_reconstruct_H(e) - entropy_e(e));
        double dq = std::abs(lk_reconstruct_Q(e) - subentropy_e(e));
        fold_residual(part, std::max(dh, dq), "e2=" + fmt(cfg.d >= 2 ? e.e(2) : 0.0));
        return part;
    };
    std::vector<VerificationReport> out = {
        reduce_samples("lk_reconstruct", tol, cfg.samples, cfg.threads, body)};

    // Affine part of the representation: value at the apex and slope at
    // infinity along e_2 both vanish.
    VerificationReport affine = make_report("lk_affine", 1e-6);
    std::vector<double> apex(static_cast<std::size_t>(cfg.d), 0.0);
    apex[0] = 1.0;
    double a = lk_reconstruct_H(SymPolyPoint(apex));
    fold_residual(affine, std::abs(a), "H(1,0,...,0)");
    if (cfg.d >= 2) {
        const double big = 1e14;
        std::vector<double> far = apex;
        far[1] = big;
        double b = lk_reconstruct_H(SymPolyPoint(far)) / big;
        fold_residual(affine, std::abs(b), "slope along e_2 at 1e14");
    }
    out.push_back(affine);
    return out;
}

std::vector<VerificationReport> suite_haar(const SuiteConfig& cfg, double tol) {
    VerificationReport report = make_report("haar", tol);

    // Maximally mixed: deterministic measurement entropy, exact identity.
    HaarConfig mixed;
    mixed.dim = cfg.d;
    mixed.eigenvalues.assign(static_cast<std::size_t>(cfg.d), 1.0 / cfg.d);
    mixed.samples = std::max(2, std::min(cfg.samples, 50));
    mixed.seed = cfg.seed;
    HaarEstimate est = estimate_Q(mixed, cfg.threads);
    double exact = std::log(static_cast<double>(cfg.d)) - harmonic_tail(cfg.d);
    fold_residual(report, std::abs(est.implied_Q - exact) - 1e-9, "maximally mixed");
    fold_residual(report, est.std_error, "maximally mixed variance");

    for (int rep = 0; rep < 2; ++rep) {
        Rng rng = Rng::stream(suite_hash("haar"), static_cast<std::uint64_t>(rep));
        std::vector<double> eigs = sample_simplex(rng, cfg.d);
        HaarConfig hc{cfg.d, eigs, std::max<long long>(cfg.samples, 200), cfg.seed + rep};
        HaarEstimate he = estimate_Q(hc, cfg.threads);
        fold_residual(report, std::abs(he.z_score) - 4.0, "random eigenvalues #" + std::to_string(rep));
    }
    return {report};
}

struct SuiteEntry {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<SuiteEntry>& suite_table() {
    static const std::vector<SuiteEntry> table = {
        {{"cross_oracle", 1e-8, 200}, suite_cross_oracle},
        {{"sum_identities", 1e-8, 100}, suite_sum_identities},
        {{"duality", 1e-8, 100}, suite_duality},
        {{"index_degeneracy", 1e-9, 100}, suite_index_degeneracy},
        {{"derivative_bounds", 1e-8, 100}, suite_derivative_bounds},
        {{"de1_bound", 1e-8, 100}, suite_de1_bound},
        {{"hq_difference", 1e-8, 100}, suite_hq_difference},
        {{"scaling", 1e-8, 100}, suite_scaling},
        {{"reduction", 1e-8, 100}, suite_reduction},
        {{"schur", 1e-10, 50}, suite_schur},
        {{"bipartite", 1e-8, 50}, suite_bipartite},
        {{"majorant", 1e-10, 100}, suite_majorant},
        {{"bound_attainment", 1e-10, 100}, suite_bound_attainment},
        {{"pick", 0.0, 50}, suite_pick},
        {{"complete_monotonicity", 0.0, 1}, suite_complete_monotonicity},
        {{"lk_reconstruct", 1e-4, 20}, suite_lk_reconstruct},
        {{"haar", 0.0, 1000}, suite_haar},
    };
    return table;
}

}  // namespace

const std::vector<SuiteInfo>& registered_suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : suite_table()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool suite_registered(const std::string& name) {
    for (const auto& e : suite_table())
        if (e.info.name == name) return true;
    return false;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
    for (const auto& e : suite_table()) {
        if (e.info.name == name) {
            SuiteConfig effective = cfg;
            if (effective.samples <= 0) effective.samples = e.info.default_samples;
            double tol = cfg.tol_override.value_or(e.info.tolerance);
            return e.fn(effective, tol);
        }
    }
    throw DomainViolation("unknown suite: " + name);
}

std::vector<VerificationReport> run_all_suites(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    for (const auto& e : suite_table()) {
        SuiteConfig effective = cfg;
        if (effective.samples <= 0) effective.samples = e.info.default_samples;
        double tol = cfg.tol_override.value_or(e.info.tolerance);
        auto reports = e.fn(effective, tol);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

}  // namespace subent
