#include "subent/contour.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace subent {

namespace {

// Roots of p, required real, strictly positive, and strictly inside the
// contour with margin 1e-6. The contour itself must miss the closed
// negative real axis, so center - radius > 0.
std::vector<double> validated_roots(const SymPolyPoint& e, const ContourSpec& c) {
    if (c.nodes < 16) throw ContourViolation("contour needs at least 16 nodes");
    if (!(c.center > 0.0) || !(c.radius > 0.0))
        throw ContourViolation("contour center and radius must be positive");
    if (!(c.radius < c.center))
        throw ContourViolation("contour intersects the closed negative real axis");

    RootSet rs = roots_from_symmetric(e);
    if (rs.classification != RootClassification::AllRealNonNegative)
        throw ContourViolation("contour evaluation requires all roots real and non-negative");
    std::vector<double> roots;
    roots.reserve(rs.roots.size());
    for (const auto& z : rs.roots) {
        double x = z.real();
        if (!(x > 0.0))
            throw ContourViolation("root at the origin cannot be enclosed while excluding it");
        if (std::abs(x - c.center) >= c.radius - 1e-6)
            throw ContourViolation("root outside or within 1e-6 of the contour");
        roots.push_back(x);
    }
    return roots;
}

double trapezoid_circle(const ContourSpec& c, const std::function<cplx(cplx)>& f,
                        ContourDiagnostics* diag) {
    // (-1 / 2 pi i) oint f dz  ->  -(r / N) sum f(z_k) e^{i theta_k}.
    cplx acc = 0.0;
    for (int k = 0; k < c.nodes; ++k) {
        double theta = 2.0 * M_PI * k / c.nodes;
        cplx w(std::cos(theta), std::sin(theta));
        acc += f(c.center + c.radius * w) * w;
    }
    acc *= -c.radius / static_cast<double>(c.nodes);
    if (diag) diag->imag_residual = std::abs(acc.imag());
    return acc.real();
}

// p and p' by Horner on the signed coefficients.
std::pair<cplx, cplx> p_dp(const SymPolyPoint& e, cplx z) {
    cplx p = 1.0;
    cplx dp = 0.0;
    double sign = -1.0;
    for (int k = 1; k <= e.dim(); ++k) {
        dp = dp * z + p;
        p = p * z + sign * e.e(k);
        sign = -sign;
    }
    return {p, dp};
}

}  // namespace

ContourSpec auto_contour(const SymPolyPoint& e, int nodes) {
    RootSet rs = roots_from_symmetric(e);
    if (rs.classification != RootClassification::AllRealNonNegative)
        throw ContourViolation("auto contour requires all roots real and non-negative");
    double lo = rs.roots.front().real();
    double hi = rs.roots.back().real();
    if (!(lo > 0.0))
        throw ContourViolation("auto contour cannot enclose a root at the origin");
    return ContourSpec{0.5 * (lo + hi), 0.5 * (hi - lo) + 0.5 * lo, nodes};
}

double entropy_contour(const SymPolyPoint& e, const ContourSpec& c,
                       ContourDiagnostics* diag) {
    validated_roots(e, c);
    return trapezoid_circle(c,
                            [&e](cplx z) {
                                auto [p, dp] = p_dp(e, z);
                                return z * std::log(z) * dp / p;
                            },
                            diag);
}

double subentropy_contour(const SymPolyPoint& e, const ContourSpec& c,
                          ContourDiagnostics* diag) {
    validated_roots(e, c);
    const int d = e.dim();
    return trapezoid_circle(c,
                            [&e, d](cplx z) {
                                return std::pow(z, d) * std::log(z) / p_dp(e, z).first;
                            },
                            diag);
}

}  // namespace subent
