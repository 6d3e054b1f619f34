#pragma once

#include <functional>
#include <string>
#include <vector>

#include "subent/identities.hpp"
#include "subent/quadrature.hpp"
#include "subent/sympoly.hpp"

namespace subent {

/// Point on the 2D surface carrying the Levy-Khintchine density: the free
/// coordinates are r = t_{d-1}/t_d and t_d; the rest follow as
/// t_{d-i} = r^i t_d.
struct LKSurfacePoint {
    double r;
    double t_d;
};

/// Implied full coordinates (t_2, ..., t_d).
std::vector<double> implied_coordinates(const LKSurfacePoint& p, int d);

/// Effective 2D density weight for the H representation: for d >= 3,
/// t_d exp(-t_d (r^d + r^{d-1})); for d = 2 the surface degenerates and the
/// density is the single-variable mu(t_2) = (1/t_2) integral exp(-(tau^2+tau) t_2) dtau.
double lk_density_H(const LKSurfacePoint& p, int d);

/// Q analogue: r^d t_d exp(-t_d (r^d + r^{d-1})) for d >= 3; for d = 2,
/// mu(t_2) = integral tau^2 exp(-(tau^2+tau) t_2) dtau.
double lk_density_Q(const LKSurfacePoint& p, int d);

/// Reconstruct H(1, e_2, ..., e_d) from the representation by genuine 2D
/// quadrature of
///   integral integral (1 - e^{-t xi(tau)}) e^{-t tau^{d-1}(tau+1)} / t  dt dtau,
/// xi(tau) = e_2 tau^{d-2} + ... + e_d. Requires e_1 = 1.
double lk_reconstruct_H(const SymPolyPoint& e, const QuadratureConfig& cfg = {});

/// Same with the Q weight: integrand (1 - e^{-t xi}) tau^d e^{-t tau^{d-1}(tau+1)}.
double lk_reconstruct_Q(const SymPolyPoint& e, const QuadratureConfig& cfg = {});

struct CmReport {
    std::string target;
    int orders = 0;
    int hard_failures = 0;
    int inconclusive = 0;
    std::vector<double> signed_differences;  // (-1)^j Delta^j f, j = 0..orders
    bool pass = true;                        // no hard failures
};

/// Forward finite-difference complete-monotonicity test along one variable:
/// for j = 0..orders the j-th forward difference must have sign (-1)^j. Step
/// h = 1e-2 (1 + e_k); a negative difference below the 1e3 * eps * scale
/// noise floor is reported inconclusive rather than failed.
CmReport check_complete_monotonicity(const std::function<double(double)>& f, double ek,
                                     int orders, const std::string& target = "f");

/// Pick-property sweep: with e_1 = 1 and the remaining coordinates at the
/// maximally mixed values, substitute each grid point (Im > 0) for e_k and
/// require Im H > 0 and Im Q > 0.
VerificationReport pick_sweep(int dim, int k, const std::vector<cplx>& grid,
                              const QuadratureConfig& cfg = {});

}  // namespace subent
