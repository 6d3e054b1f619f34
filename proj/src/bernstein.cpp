#include "subent/bernstein.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "subent/halfaxis.hpp"

namespace subent {

namespace {

void check_surface_point(const LKSurfacePoint& p, int d) {
    if (d < 2) throw DomainViolation("Levy-Khintchine surface needs d >= 2");
    if (!(p.r > 0.0) || !(p.t_d > 0.0))
        throw DomainViolation("surface coordinates must be positive");
}

// xi(tau) = e_2 tau^{d-2} + ... + e_d and a(tau) = tau^{d-1} (tau + 1),
// evaluated as the ratio kappa = xi / a without forming huge powers.
double kappa_ratio(const SymPolyPoint& e, double tau) {
    const int d = e.dim();
    if (d < 2) return 0.0;
    if (tau > 1.0) {
        // xi / tau^{d-1} = e_2 s + e_3 s^2 + ... with s = 1/tau.
        double s = 1.0 / tau;
        double acc = 0.0;
        for (int k = d; k >= 2; --k) acc = (acc + e.e(k)) * s;
        return acc / (tau + 1.0);
    }
    double xi = 0.0;
    for (int k = 2; k <= d; ++k) xi = xi * tau + e.e(k);
    double a = std::pow(tau, d - 1) * (tau + 1.0);
    return xi / a;
}

QuadratureConfig inner_config() {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-13;
    cfg.max_subdivisions = 400;
    return cfg;
}

// integral_0^inf (1 - e^{-kappa s}) e^{-s} / s ds. The integrand carries
// mass across log(kappa) decades; past kappa ~ 1e10 the transition at
// s = 1/kappa drops below the panel-width floor of the algebraic map, so
// the tail switches to the substitution s = e^{+-y}, which turns the
// decades into an O(log kappa) wide plateau.
double frullani_inner(double kappa, const QuadratureConfig& inner) {
    if (kappa <= 1e10) {
        return integrate_half_axis(
            [kappa](double s) { return -std::expm1(-kappa * s) * std::exp(-s) / s; }, inner);
    }
    double upper = integrate_half_axis(
        [kappa](double y) {
            double s = std::exp(y);
            return -std::expm1(-kappa * s) * std::exp(-s);
        },
        inner);
    double lower = integrate_half_axis(
        [kappa](double y) {
            double s = std::exp(-y);
            return -std::expm1(-kappa * s) * std::exp(-s);
        },
        inner);
    return upper + lower;
}

}  // namespace

std::vector<double> implied_coordinates(const LKSurfacePoint& p, int d) {
    check_surface_point(p, d);
    std::vector<double> t(static_cast<std::size_t>(d - 1));  // t_2 .. t_d
    for (int j = 2; j <= d; ++j)
        t[static_cast<std::size_t>(j - 2)] = std::pow(p.r, d - j) * p.t_d;
    return t;
}

double lk_density_H(const LKSurfacePoint& p, int d) {
    check_surface_point(p, d);
    if (d == 2) {
        double t2 = p.t_d;
        double integral = integrate_half_axis(
            [t2](double tau) { return std::exp(-(tau * tau + tau) * t2); }, inner_config());
        return integral / t2;
    }
    double exponent = p.t_d * (std::pow(p.r, d) + std::pow(p.r, d - 1));
    return p.t_d * std::exp(-exponent);
}

double lk_density_Q(const LKSurfacePoint& p, int d) {
    check_surface_point(p, d);
    if (d == 2) {
        double t2 = p.t_d;
        return integrate_half_axis(
            [t2](double tau) { return tau * tau * std::exp(-(tau * tau + tau) * t2); },
            inner_config());
    }
    double exponent = p.t_d * (std::pow(p.r, d) + std::pow(p.r, d - 1));
    return std::pow(p.r, d) * p.t_d * std::exp(-exponent);
}

double lk_reconstruct_H(const SymPolyPoint& e, const QuadratureConfig& cfg) {
    if (std::abs(e.e(1) - 1.0) > 1e-12)
        throw DomainViolation("reconstruction requires e_1 = 1");
    const QuadratureConfig inner = inner_config();
    // Inner variable rescaled to s = a(tau) t, which makes the t-integral
    // integral (1 - e^{-kappa s}) e^{-s} / s ds with kappa = xi/a.
    auto outer = [&e, &inner](double tau) {
        double kappa = kappa_ratio(e, tau);
        if (kappa == 0.0) return 0.0;
        return frullani_inner(kappa, inner);
    };
    QuadratureConfig outer_cfg = cfg;
    outer_cfg.rel_tol = std::max(cfg.rel_tol, 1e-7);
    outer_cfg.abs_tol = std::max(cfg.abs_tol, 1e-10);
    return integrate_half_axis(outer, outer_cfg);
}

double lk_reconstruct_Q(const SymPolyPoint& e, const QuadratureConfig& cfg) {
    if (std::abs(e.e(1) - 1.0) > 1e-12)
        throw DomainViolation("reconstruction requires e_1 = 1");
    const QuadratureConfig inner = inner_config();
    auto outer = [&e, &inner](double tau) {
        double kappa = kappa_ratio(e, tau);
        if (kappa == 0.0) return 0.0;
        double inner_val = integrate_half_axis(
            [kappa](double s) { return -std::expm1(-kappa * s) * std::exp(-s); }, inner);
        return tau / (tau + 1.0) * inner_val;
    };
    QuadratureConfig outer_cfg = cfg;
    outer_cfg.rel_tol = std::max(cfg.rel_tol, 1e-7);
    outer_cfg.abs_tol = std::max(cfg.abs_tol, 1e-10);
    return integrate_half_axis(outer, outer_cfg);
}

CmReport check_complete_monotonicity(const std::function<double(double)>& f, double ek,
                                     int orders, const std::string& target) {
    if (orders < 0 || orders > 6)
        throw DomainViolation("complete-monotonicity orders must be in 0..6");
    CmReport report;
    report.target = target;
    report.orders = orders;

    const double h = 1e-2 * (1.0 + ek);
    std::vector<double> table(static_cast<std::size_t>(orders) + 1);
    double scale = 0.0;
    for (int i = 0; i <= orders; ++i) {
        table[static_cast<std::size_t>(i)] = f(ek + i * h);
        scale = std::max(scale, std::abs(table[static_cast<std::size_t>(i)]));
    }
    const double noise_floor = 1e3 * std::numeric_limits<double>::epsilon() * scale;

    double sign = 1.0;
    for (int j = 0; j <= orders; ++j) {
        double signed_diff = sign * table[0];
        report.signed_differences.push_back(signed_diff);
        if (signed_diff < 0.0) {
            if (-signed_diff <= noise_floor) {
                report.inconclusive += 1;
            } else {
                report.hard_failures += 1;
            }
        }
        for (std::size_t i = 0; i + 1 < table.size(); ++i) table[i] = table[i + 1] - table[i];
        table.resize(table.size() - 1);
        sign = -sign;
    }
    report.pass = report.hard_failures == 0;
    return report;
}

VerificationReport pick_sweep(int dim, int k, const std::vector<cplx>& grid,
                              const QuadratureConfig& cfg) {
    if (k < 2 || k > dim) throw DomainViolation("pick_sweep requires 2 <= k <= d");
    VerificationReport report;
    report.identity_name = "pick";
    report.tolerance = 0.0;

    // Base point: the maximally mixed image e_j = C(d, j) / d^j (e_1 = 1).
    std::vector<cplx> base(static_cast<std::size_t>(dim));
    double binom = 1.0;
    for (int j = 1; j <= dim; ++j) {
        binom *= static_cast<double>(dim - j + 1) / j;
        base[static_cast<std::size_t>(j - 1)] = binom / std::pow(static_cast<double>(dim), j);
    }

    for (const cplx& z : grid) {
        if (!(z.imag() > 0.0))
            throw DomainViolation("pick_sweep grid points must have positive imaginary part");
        std::vector<cplx> coeffs = base;
        coeffs[static_cast<std::size_t>(k - 1)] = z;
        ComplexSymPolyPoint e(coeffs);
        cplx H = entropy_e_complex(e, cfg);
        cplx Q = subentropy_e_complex(e, cfg);
        std::ostringstream os;
        os << "d=" << dim << " k=" << k << " z=(" << z.real() << "," << z.imag() << ")";
        fold_residual(report, -H.imag(), os.str() + " Im H");
        fold_residual(report, -Q.imag(), os.str() + " Im Q");
    }
    return report;
}

}  // namespace subent
