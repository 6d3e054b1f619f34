#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subent/direct.hpp"
#include "subent/halfaxis.hpp"
#include "subent/sympoly.hpp"

namespace subent {

struct VerificationReport {
    std::string identity_name;
    int samples = 0;
    double max_residual = 0.0;  // signed: > 0 means the identity is violated
    bool pass = true;
    std::string worst_witness;
    double tolerance = 0.0;
};

/// Fold one residual into a report, keeping the worst witness.
void fold_residual(VerificationReport& report, double residual, const std::string& witness);
/// Merge a sub-report (used when batching over samples).
void merge_report(VerificationReport& into, const VerificationReport& sub);

struct BoundReport {
    double bound_value = 0.0;
    std::optional<ProbVector> attained_at;
    double slack = 0.0;  // bound validity requires slack >= -tolerance
};

/// Residuals of H = e_1 + sum k e_k dH/de_k and Q = e_1 + sum e_k dH/de_k,
/// plus the f_k = e_k^{1/k} restatement of the H sum. Terms with e_k = 0 are
/// dropped (their coefficient vanishes faster than the derivative diverges).
VerificationReport check_sum_identities(const SymPolyPoint& e, double tol = 1e-8,
                                        const QuadratureConfig& cfg = {});

/// c_{d,k} = d^{k-1} / ((d-k+1) C(d-1, k-2) e1^{k-1}); requires k >= 2.
double c_bound(int d, int k, double e1);

/// Sign/bound pattern: dH/de_k >= c_{d,k}(e1) and dQ/de_k >= c_{2d,k}(2 e1)
/// for k >= 2, and for 2 <= m <= max_m over every index multiset
///   (-1)^{m-1} d^m H >= c_{m d, K}(m e1),
///   (-1)^{m-1} d^m Q >= c_{(m+1) d, K}((m+1) e1).
/// The first coordinate of the comparison polynomial is the repeated-point
/// value m e1, which is what the repetition identity produces; the bounds
/// hold on e-points arising from non-negative x.
VerificationReport check_derivative_bounds(const SymPolyPoint& e, int max_m,
                                           double tol = 1e-8,
                                           const QuadratureConfig& cfg = {});

/// -dQ/de_k = d2H/de_l de_m for every k = l + m with l, m >= 1.
VerificationReport check_HQ_duality(const SymPolyPoint& e, double tol = 1e-8,
                                    const QuadratureConfig& cfg = {});

/// H - Q >= sum_{k>=2} d^{k-1} e_k / (C(d-1,k-1) e1^{k-1}); slack >= 0 on
/// e-points arising from non-negative x. Also checks the first-term
/// consequence H - Q >= d e_2 / ((d-1) e1).
BoundReport hq_difference_bound(const SymPolyPoint& e, const QuadratureConfig& cfg = {});

struct CanonicalPair {
    double a;
    double b;  // a <= b; (a, ..., a, b) matches the given e1, e2
};

/// Solve (d-1)a + b = e1, C(d-1,2)a^2 + (d-1)ab = e2 with the smaller root
///   a = ((d-1) e1 - sqrt((d-1)^2 e1^2 - 2 e2 d (d-1))) / (d (d-1)).
CanonicalPair canonical_majorant(double e1, double e2, int d);

/// f_k(a, ..., a, b) >= e_k(x) for all k when (a, b) matches e1(x), e2(x).
VerificationReport check_majorant_dominance(const ProbVector& x, double tol = 1e-10);

struct UpperBounds {
    double H_bound;
    double Q_bound;
    double HU_bound;
    CanonicalPair ab;
};

/// Entropy and subentropy upper bounds that depend only on (e1, e2):
/// H <= -(d-1) a ln a - b ln b and Q <= Q(a, ..., a, b); both attained at the
/// canonical set. HU_bound = -e1 ln e1 + ln(d) sqrt(2 d e2 / (d-1)) is the
/// comparison bound, reported informationally.
UpperBounds hq_upper_bounds(double e1, double e2, int d);

/// If one vector majorizes the other, the majorizing one has smaller H and Q.
/// Throws NotComparable when neither majorizes.
VerificationReport check_schur_concavity(const ProbVector& x, const ProbVector& y,
                                         double tol = 1e-10);

/// Bipartite marginal dominance: H(A) <= H(AB), Q(A) <= Q(AB), and for
/// m in {1, 2}, (-1)^{m-1} d^m H(A) >= (-1)^{m-1} d^m H(AB) (same for Q).
/// The signed derivatives decrease when coordinates grow (the order-(m+1)
/// sign pattern), and e^A_k <= e^AB_k with e^A_1 = e^AB_1, which forces this
/// direction.
VerificationReport check_bipartite(const std::vector<std::vector<double>>& joint,
                                   double tol = 1e-8, const QuadratureConfig& cfg = {});

/// All five scaling relations for theta >= 1: the exact x-space identities
/// value(theta x) = theta value(x) - theta e1 ln theta for H and Q (hence
/// their difference relation), and the e-space inequalities
/// Q(theta e) <= theta Q(e), H(theta e) <= theta H(e).
VerificationReport check_scaling(const ProbVector& x, double theta, double tol = 1e-8,
                                 const QuadratureConfig& cfg = {});

/// Non-decreasing index multisets of length m over {1, ..., d}.
std::vector<std::vector<int>> index_multisets(int d, int m);

}  // namespace subent
