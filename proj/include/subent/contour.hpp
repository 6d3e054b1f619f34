#pragma once

#include "subent/sympoly.hpp"

namespace subent {

/// Circle |z - center| = radius, traversed counterclockwise with a uniform
/// trapezoidal rule in the angle (exponentially convergent for periodic
/// analytic integrands). Must enclose every root of p and stay off the
/// closed negative real axis, i.e. radius < center.
struct ContourSpec {
    double center;
    double radius;
    int nodes = 512;
};

struct ContourDiagnostics {
    double imag_residual = 0.0;  // |Im| of the raw numeric answer
};

/// Contour chosen from the root locations: centered mid-spectrum with the
/// spare margin x_min / 2 on both the roots and the origin.
ContourSpec auto_contour(const SymPolyPoint& e, int nodes = 512);

/// H = (-1 / 2 pi i) oint z ln z p'(z)/p(z) dz, real part.
double entropy_contour(const SymPolyPoint& e, const ContourSpec& c,
                       ContourDiagnostics* diag = nullptr);

/// Q = (-1 / 2 pi i) oint z^d ln z / p(z) dz, real part.
double subentropy_contour(const SymPolyPoint& e, const ContourSpec& c,
                          ContourDiagnostics* diag = nullptr);

}  // namespace subent
