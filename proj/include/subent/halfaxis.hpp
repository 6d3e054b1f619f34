#pragma once

#include <initializer_list>
#include <vector>

#include "subent/quadrature.hpp"
#include "subent/sympoly.hpp"

namespace subent {

/// Ordered derivative index (k_1, ..., k_m) in e-coordinates. For m >= 2 the
/// derivative value depends only on K = sum k_j.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> ks);
    MultiIndex(std::initializer_list<int> ks) : MultiIndex(std::vector<int>(ks)) {}

    int order() const { return static_cast<int>(ks_.size()); }  // m
    int sum() const { return sum_; }                            // K
    const std::vector<int>& indices() const { return ks_; }
    void validate(int dim) const;

private:
    std::vector<int> ks_;
    int sum_;
};

/// H from the half-axis formula
///   integral_0^inf [ -tau q'(tau)/q(tau) - e_1/(tau+1) + d ] dtau.
double entropy_e(const SymPolyPoint& e, const QuadratureConfig& cfg = {},
                 QuadratureDiagnostics* diag = nullptr);

/// H from the integrated-by-parts form
///   integral_0^inf [ ln q + (e_1 - d) ln tau - e_1 ln(tau+1) ] dtau,
/// with the terms combined into one logarithm before quadrature.
double entropy_e_log_form(const SymPolyPoint& e, const QuadratureConfig& cfg = {},
                          QuadratureDiagnostics* diag = nullptr);

/// Q from integral_0^inf [ -tau^d/q(tau) - e_1/(tau+1) + 1 ] dtau.
double subentropy_e(const SymPolyPoint& e, const QuadratureConfig& cfg = {},
                    QuadratureDiagnostics* diag = nullptr);

/// Mixed partial of H in e-coordinates:
///   m = 1, k >= 2:  integral tau^{d-k} / q
///   m = 1, k = 1:   integral [ tau^{d-1}/q - 1/(tau+1) ] - 1
///   m >= 2:         (-1)^{m-1} (m-1)! integral tau^{m d - K} / q^m
/// Throws DivergentIntegral when non-integrable at tau = 0.
double dH(const SymPolyPoint& e, const MultiIndex& idx, const QuadratureConfig& cfg = {},
          QuadratureDiagnostics* diag = nullptr);

/// Mixed partial of Q:
///   m = 1, k >= 2:  integral tau^{2d-k} / q^2
///   m >= 2:         (-1)^{m-1} m! integral tau^{(m+1) d - K} / q^{m+1}
///   m = 1, k = 1:   5-point finite differences of subentropy_e (the paper
///                   gives no regularized integrand for this one).
double dQ(const SymPolyPoint& e, const MultiIndex& idx, const QuadratureConfig& cfg = {},
          QuadratureDiagnostics* diag = nullptr);

/// Analytic continuation of entropy_e through the log-form integrand with
/// the principal branch; Im q(tau) = Im(e_k) tau^{d-k} > 0 keeps q off the
/// cut for tau > 0. Maps the upper half-plane into itself.
cplx entropy_e_complex(const ComplexSymPolyPoint& e, const QuadratureConfig& cfg = {},
                       QuadratureDiagnostics* diag = nullptr);

/// Same continuation for the Q integrand.
cplx subentropy_e_complex(const ComplexSymPolyPoint& e, const QuadratureConfig& cfg = {},
                          QuadratureDiagnostics* diag = nullptr);

}  // namespace subent
