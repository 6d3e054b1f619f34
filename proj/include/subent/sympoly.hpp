#pragma once

#include <complex>
#include <vector>

#include "subent/errors.hpp"

namespace subent {

using cplx = std::complex<double>;

/// Non-negative reals x_1..x_d. The probability condition sum(x) = 1 is
/// deliberately not enforced; callers that need it inspect e_1 themselves.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> values);
    ProbVector(std::initializer_list<double> values)
        : ProbVector(std::vector<double>(values)) {}

    int dim() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

private:
    std::vector<double> values_;
};

/// Point (e_1, ..., e_d) in the closed positive cone of elementary symmetric
/// polynomial coordinates. The full cone is accepted, including points that
/// do not arise from any non-negative x assignment.
class SymPolyPoint {
public:
    explicit SymPolyPoint(std::vector<double> coeffs);
    SymPolyPoint(std::initializer_list<double> coeffs)
        : SymPolyPoint(std::vector<double>(coeffs)) {}

    int dim() const { return static_cast<int>(coeffs_.size()); }
    /// 1-based accessor: e(k) = e_k.
    double e(int k) const { return coeffs_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

private:
    std::vector<double> coeffs_;
};

/// Complexified e-point for Pick-property sweeps: e_1 = 1, at most one
/// coordinate off the real axis, and that one in the open upper half-plane.
class ComplexSymPolyPoint {
public:
    explicit ComplexSymPolyPoint(std::vector<cplx> coeffs);
    ComplexSymPolyPoint(std::initializer_list<cplx> coeffs)
        : ComplexSymPolyPoint(std::vector<cplx>(coeffs)) {}

    int dim() const { return static_cast<int>(coeffs_.size()); }
    cplx e(int k) const { return coeffs_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

private:
    std::vector<cplx> coeffs_;
};

enum class RootClassification { AllRealNonNegative, ConjugatePairs };

struct RootCluster {
    cplx center;
    int multiplicity;
};

struct RootSet {
    std::vector<cplx> roots;  // size d; non-real roots in exact conjugate pairs
    RootClassification classification;
    std::vector<RootCluster> clusters;  // roots grouped to 1e-8 absolute
};

/// Elementary symmetric polynomials of x, computed by the stable recurrence
/// that builds prod(t + x_j) coefficient by coefficient.
SymPolyPoint elementary_symmetric(const ProbVector& x);

/// All d roots of x^d - e_1 x^{d-1} + ... + (-1)^d e_d by Aberth-Ehrlich
/// simultaneous iteration. Throws ConvergenceFailure if the composed
/// elementary_symmetric round trip misses `tol`, DomainViolation if a root
/// comes out real and below -tol. The default matches what densely packed
/// spectra can deliver in double precision.
RootSet roots_from_symmetric(const SymPolyPoint& e, double tol = 1e-10);

/// q(tau) = tau^d + e_1 tau^{d-1} + ... + e_d (Horner).
double q_eval(const SymPolyPoint& e, double tau);
cplx q_eval(const SymPolyPoint& e, cplx tau);
cplx q_eval(const ComplexSymPolyPoint& e, double tau);

/// p(z) = z^d - e_1 z^{d-1} + ... + (-1)^d e_d; satisfies p(z) = (-1)^d q(-z).
cplx p_eval(const SymPolyPoint& e, cplx z);

/// Evaluation helpers for the half-axis integrands. q is kept in the
/// factored form tau^z * qr(tau) with qr(0) = e_{d'} > 0 (d' the largest
/// index with e_k > 0), so logs and ratios stay finite on the whole ray.
class HalfAxisPoly {
public:
    explicit HalfAxisPoly(const SymPolyPoint& e);

    int dim() const { return d_; }
    /// Largest k with e_k > 0 (0 when every e_k vanishes).
    int effective_degree() const { return dprime_; }
    double e1() const { return e1_; }

    double value(double tau) const;      // q(tau)
    double log_value(double tau) const;  // ln q(tau), overflow-safe
    double tau_dlog(double tau) const;   // tau q'(tau) / q(tau)
    /// ln( q(tau) tau^{e1-d} / (tau+1)^{e1} ): the integrated-by-parts
    /// entropy integrand, combined before taking the log so the large-tau
    /// cancellation happens inside a single logarithm.
    double log_ratio(double tau) const;
    /// tau^a / q(tau)^p, evaluated in log space.
    double power_over_q(double tau, int a, int p) const;

    /// Half-axis integrands with the O(1/tau) cancellations at large tau
    /// factored out analytically; their rounding noise stays relative, which
    /// the mapped quadrature needs for tolerances near machine precision.
    double entropy_integrand(double tau) const;     // -tau q'/q - e1/(tau+1) + d
    double subentropy_integrand(double tau) const;  // -tau^d/q - e1/(tau+1) + 1
    double de1_integrand(double tau) const;         // tau^{d-1}/q - 1/(tau+1)

private:
    int d_;
    int dprime_;        // largest k with e_k > 0
    double e1_;
    std::vector<double> coeffs_;   // e_1..e_d
    std::vector<double> reduced_;  // 1, e_1, ..., e_{d'} (monic first)
};

}  // namespace subent
