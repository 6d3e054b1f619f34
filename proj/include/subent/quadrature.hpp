#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "subent/errors.hpp"

namespace subent {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 200;
    // The semi-infinite map is fixed: tau = u / (1 - u), u in [0, 1).
};

struct QuadratureDiagnostics {
    int panels = 0;
    int evaluations = 0;
    double error_estimate = 0.0;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK qk15 abscissae).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T>
struct Panel {
    double a, b;
    T value;
    double error;
};

template <typename T, typename F>
Panel<T> evaluate_panel(const F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const T fc = f(mid);
    T kronrod = kGK15WeightsK[7] * fc;
    T gauss = kGK15WeightsG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        T fsum = f(mid - half * kGK15Nodes[i]) + f(mid + half * kGK15Nodes[i]);
        kronrod += kGK15WeightsK[i] * fsum;
        if (i % 2 == 1) gauss += kGK15WeightsG[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return Panel<T>{a, b, kronrod, std::abs(kronrod - gauss)};
}

template <typename T, typename F>
T adaptive_unit(const F& f, const QuadratureConfig& cfg, QuadratureDiagnostics* diag) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_subdivisions < 1)
        throw DomainViolation("quadrature tolerances must be positive and subdivisions >= 1");
    constexpr double kMinWidth = 1e-14;  // geometric splitting floor
    std::vector<Panel<T>> panels;
    panels.push_back(evaluate_panel<T>(f, 0.0, 1.0));
    int evals = 15;
    int splits = 0;

    auto totals = [&panels]() {
        T value{};
        double error = 0.0;
        for (const auto& p : panels) {
            value += p.value;
            error += p.error;
        }
        return std::pair<T, double>(value, error);
    };

    while (true) {
        auto [value, error] = totals();
        if (!(std::abs(value) == std::abs(value)))  // NaN guard
            throw QuadratureFailure("integrand produced NaN");
        double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
        if (error <= target) {
            if (diag) {
                diag->panels = static_cast<int>(panels.size());
                diag->evaluations = evals;
                diag->error_estimate = error;
            }
            return value;
        }
        // Split the panel with the largest error that is still splittable.
        std::size_t worst = panels.size();
        double worst_err = -1.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (panels[i].b - panels[i].a <= kMinWidth) continue;
            if (panels[i].error > worst_err) {
                worst_err = panels[i].error;
                worst = i;
            }
        }
        if (worst == panels.size())
            throw QuadratureFailure("tolerance unreachable: all panels at minimum width");
        if (splits >= cfg.max_subdivisions)
            throw QuadratureFailure("tolerance unreachable within subdivision limit");
        Panel<T> old = panels[worst];
        double mid = 0.5 * (old.a + old.b);
        panels[worst] = evaluate_panel<T>(f, old.a, mid);
        panels.push_back(evaluate_panel<T>(f, mid, old.b));
        evals += 30;
        ++splits;
    }
}

}  // namespace detail

/// Adaptive Gauss-Kronrod over (0, 1). Integrand is never evaluated at the
/// endpoints, so integrable endpoint singularities are admissible.
template <typename F>
double integrate_unit(const F& f, const QuadratureConfig& cfg = {},
                      QuadratureDiagnostics* diag = nullptr) {
    return detail::adaptive_unit<double>(f, cfg, diag);
}

template <typename F>
std::complex<double> integrate_unit_complex(const F& f, const QuadratureConfig& cfg = {},
                                            QuadratureDiagnostics* diag = nullptr) {
    return detail::adaptive_unit<std::complex<double>>(f, cfg, diag);
}

namespace detail {

// tau = u/(1-u) over u in (0,1), evaluated as two pieces so that each
// potentially singular end (tau -> 0 and tau -> inf) sits at the origin of
// its own panel parameter, where floating point keeps full resolution.
template <typename T, typename G>
T half_axis_pieces(const G& g, const QuadratureConfig& cfg, QuadratureDiagnostics* diag) {
    QuadratureConfig piece = cfg;
    piece.rel_tol = 0.5 * cfg.rel_tol;
    piece.abs_tol = 0.5 * cfg.abs_tol;

    QuadratureDiagnostics d1, d2;
    // u in (0, 1/2], u = z/2: tau = z / (2 - z) in (0, 1].
    T low = adaptive_unit<T>(
        [&g](double z) {
            double denom = 2.0 - z;
            return 2.0 * g(z / denom) / (denom * denom);
        },
        piece, &d1);
    // u in [1/2, 1), w = 1 - u = z/2: tau = (2 - z) / z in [1, inf).
    T high = adaptive_unit<T>(
        [&g](double z) { return 2.0 * g((2.0 - z) / z) / (z * z); }, piece, &d2);
    if (diag) {
        diag->panels = d1.panels + d2.panels;
        diag->evaluations = d1.evaluations + d2.evaluations;
        diag->error_estimate = d1.error_estimate + d2.error_estimate;
    }
    return low + high;
}

}  // namespace detail

/// Adaptive integral over the half-axis (0, inf) using tau = u / (1 - u).
template <typename G>
double integrate_half_axis(const G& g, const QuadratureConfig& cfg = {},
                           QuadratureDiagnostics* diag = nullptr) {
    return detail::half_axis_pieces<double>(g, cfg, diag);
}

template <typename G>
std::complex<double> integrate_half_axis_complex(const G& g, const QuadratureConfig& cfg = {},
                                                 QuadratureDiagnostics* diag = nullptr) {
    return detail::half_axis_pieces<std::complex<double>>(g, cfg, diag);
}

}  // namespace subent
