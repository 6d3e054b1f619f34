#include "subent/halfaxis.hpp"

#include <cmath>
#include <string>

namespace subent {

MultiIndex::MultiIndex(std::vector<int> ks) : ks_(std::move(ks)), sum_(0) {
    if (ks_.empty()) throw DomainViolation("MultiIndex needs at least one index");
    for (int k : ks_) {
        if (k < 1) throw DomainViolation("MultiIndex entries must be >= 1");
        sum_ += k;
    }
}

void MultiIndex::validate(int dim) const {
    for (int k : ks_) {
        if (k > dim) throw DomainViolation("MultiIndex entry exceeds dimension");
    }
}

namespace {

void require_not_all_zero(const HalfAxisPoly& q) {
    if (q.effective_degree() == 0 && q.e1() == 0.0)
        throw DomainViolation("all symmetric polynomial coordinates are zero");
}

// Integrability of tau^a / q^p at tau = 0: with q = tau^{d-d'} qr and
// qr(0) > 0 the exponent there is a - p (d - d'); the integral exists iff
// that exceeds -1. At infinity the exponent is a - p d and every produced
// (a, p) pair has a - p d <= -2 except the regularized k = 1 forms, which
// never reach this helper.
void check_integrable(const HalfAxisPoly& q, int a, int p, int direction,
                      const std::string& what) {
    int exponent_at_zero = a - p * (q.dim() - q.effective_degree());
    if (exponent_at_zero <= -1) {
        throw DivergentIntegral(what + ": integrand ~ tau^" +
                                    std::to_string(exponent_at_zero) +
                                    " at tau = 0 is not integrable",
                                direction);
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Complex q(tau) for a complexified e-point, in the asymptotic form
// q = tau^d (1 + P(1/tau)) for tau > 1.
cplx complex_tail_p(const ComplexSymPolyPoint& e, double s) {
    cplx p = 0.0;
    for (int k = e.dim(); k >= 1; --k) p = (p + e.e(k)) * s;
    return p;
}

}  // namespace

double entropy_e(const SymPolyPoint& e, const QuadratureConfig& cfg,
                 QuadratureDiagnostics* diag) {
    HalfAxisPoly q(e);
    require_not_all_zero(q);
    return integrate_half_axis([&q](double tau) { return q.entropy_integrand(tau); }, cfg,
                               diag);
}

double entropy_e_log_form(const SymPolyPoint& e, const QuadratureConfig& cfg,
                          QuadratureDiagnostics* diag) {
    HalfAxisPoly q(e);
    require_not_all_zero(q);
    return integrate_half_axis([&q](double tau) { return q.log_ratio(tau); }, cfg, diag);
}

double subentropy_e(const SymPolyPoint& e, const QuadratureConfig& cfg,
                    QuadratureDiagnostics* diag) {
    HalfAxisPoly q(e);
    require_not_all_zero(q);
    return integrate_half_axis([&q](double tau) { return q.subentropy_integrand(tau); }, cfg,
                               diag);
}

double dH(const SymPolyPoint& e, const MultiIndex& idx, const QuadratureConfig& cfg,
          QuadratureDiagnostics* diag) {
    idx.validate(e.dim());
    HalfAxisPoly q(e);
    require_not_all_zero(q);
    const int d = q.dim();
    const int m = idx.order();
    const int K = idx.sum();

    if (m == 1 && K == 1) {
        // The regularized integrand converges whenever some e_k > 0: near 0
        // it behaves like tau^{d'-1} with d' >= 1.
        double integral = integrate_half_axis(
            [&q](double tau) { return q.de1_integrand(tau); }, cfg, diag);
        return integral - 1.0;
    }

    const int a = m * d - K;
    const int sign = (m % 2 == 1) ? 1 : -1;
    check_integrable(q, a, m, sign, "dH");
    double integral = integrate_half_axis(
        [&q, a, m](double tau) { return q.power_over_q(tau, a, m); }, cfg, diag);
    return sign * factorial(m - 1) * integral;
}

double dQ(const SymPolyPoint& e, const MultiIndex& idx, const QuadratureConfig& cfg,
          QuadratureDiagnostics* diag) {
    idx.validate(e.dim());
    HalfAxisPoly q(e);
    require_not_all_zero(q);
    const int d = q.dim();
    const int m = idx.order();
    const int K = idx.sum();

    if (m == 1 && K == 1) {
        // No regularized half-axis integrand in the source formulae; use
        // 5-point central differences of subentropy_e with adaptive step.
        double e1 = e.e(1);
        double h = 1e-2 * (1.0 + std::abs(e1));
        auto f = [&e, &cfg](double t) {
            std::vector<double> c = e.coeffs();
            c[0] = t;
            return subentropy_e(SymPolyPoint(c), cfg);
        };
        if (e1 >= 2.0 * h) {
            return (f(e1 - 2.0 * h) - 8.0 * f(e1 - h) + 8.0 * f(e1 + h) - f(e1 + 2.0 * h)) /
                   (12.0 * h);
        }
        // One-sided 5-point stencil for e_1 close to the boundary.
        return (-25.0 * f(e1) + 48.0 * f(e1 + h) - 36.0 * f(e1 + 2.0 * h) +
                16.0 * f(e1 + 3.0 * h) - 3.0 * f(e1 + 4.0 * h)) /
               (12.0 * h);
    }

    const int a = (m + 1) * d - K;
    const int p = m + 1;
    const int sign = (m % 2 == 1) ? 1 : -1;
    check_integrable(q, a, p, sign, "dQ");
    double integral = integrate_half_axis(
        [&q, a, p](double tau) { return q.power_over_q(tau, a, p); }, cfg, diag);
    return sign * factorial(m) * integral;
}

cplx entropy_e_complex(const ComplexSymPolyPoint& e, const QuadratureConfig& cfg,
                       QuadratureDiagnostics* diag) {
    const int d = e.dim();
    return integrate_half_axis_complex(
        [&e, d](double tau) -> cplx {
            if (tau > 1.0) {
                double s = 1.0 / tau;
                cplx p = complex_tail_p(e, s);
                // ln( (1 + P) (tau/(tau+1))^{e1} ) with e1 = 1; the product
                // stays in the right half-plane, so the principal branch is
                // analytic along the ray.
                return std::log((1.0 + p) * (tau / (tau + 1.0)));
            }
            cplx q = q_eval(e, tau);
            return std::log(q) + (1.0 - d) * std::log(tau) - std::log1p(tau);
        },
        cfg, diag);
}

cplx subentropy_e_complex(const ComplexSymPolyPoint& e, const QuadratureConfig& cfg,
                          QuadratureDiagnostics* diag) {
    const int d = e.dim();
    return integrate_half_axis_complex(
        [&e, d](double tau) -> cplx {
            if (tau > 1.0) {
                double s = 1.0 / tau;
                cplx p = complex_tail_p(e, s);
                return p / (1.0 + p) - 1.0 / (tau + 1.0);
            }
            cplx q = q_eval(e, tau);
            return -std::pow(cplx(tau), d) / q - 1.0 / (tau + 1.0) + 1.0;
        },
        cfg, diag);
}

}  // namespace subent
