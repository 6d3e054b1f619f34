#include "subent/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subent {

namespace {

constexpr int kMaxDim = 32;  // documented limit; beyond this double precision
                             // cannot hold the coefficient dynamic range

void check_dim(int d) {
    if (d < 1) throw DomainViolation("dimension must be at least 1");
    if (d > kMaxDim) throw DomainViolation("dimension exceeds supported maximum of 32");
}

}  // namespace

ProbVector::ProbVector(std::vector<double> values) : values_(std::move(values)) {
    check_dim(static_cast<int>(values_.size()));
    for (double v : values_) {
        if (!(v >= 0.0)) throw DomainViolation("ProbVector entries must be non-negative");
    }
}

SymPolyPoint::SymPolyPoint(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    check_dim(static_cast<int>(coeffs_.size()));
    for (double c : coeffs_) {
        if (!(c >= 0.0)) throw DomainViolation("SymPolyPoint coordinates must be non-negative");
    }
}

ComplexSymPolyPoint::ComplexSymPolyPoint(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    check_dim(static_cast<int>(coeffs_.size()));
    if (coeffs_[0] != cplx(1.0, 0.0))
        throw DomainViolation("ComplexSymPolyPoint requires e_1 = 1");
    int off_axis = 0;
    for (const cplx& c : coeffs_) {
        if (c.imag() != 0.0) {
            ++off_axis;
            if (c.imag() < 0.0)
                throw DomainViolation("complexified coordinate must lie in the upper half-plane");
        } else if (!(c.real() >= 0.0)) {
            throw DomainViolation("real coordinates must be non-negative");
        }
    }
    if (off_axis > 1)
        throw DomainViolation("at most one coordinate may be complex");
}

SymPolyPoint elementary_symmetric(const ProbVector& x) {
    const int d = x.dim();
    // e[k] accumulates the degree-k coefficient of prod(t + x_j); processing
    // k downwards keeps the update free of already-overwritten terms.
    std::vector<double> e(static_cast<std::size_t>(d) + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < d; ++i) {
        for (int k = i + 1; k >= 1; --k) {
            e[static_cast<std::size_t>(k)] += x[i] * e[static_cast<std::size_t>(k - 1)];
        }
    }
    return SymPolyPoint(std::vector<double>(e.begin() + 1, e.end()));
}

double q_eval(const SymPolyPoint& e, double tau) {
    double acc = 1.0;
    for (int k = 1; k <= e.dim(); ++k) acc = acc * tau + e.e(k);
    return acc;
}

cplx q_eval(const SymPolyPoint& e, cplx tau) {
    cplx acc = 1.0;
    for (int k = 1; k <= e.dim(); ++k) acc = acc * tau + e.e(k);
    return acc;
}

cplx q_eval(const ComplexSymPolyPoint& e, double tau) {
    cplx acc = 1.0;
    for (int k = 1; k <= e.dim(); ++k) acc = acc * tau + e.e(k);
    return acc;
}

cplx p_eval(const SymPolyPoint& e, cplx z) {
    cplx acc = 1.0;
    double sign = -1.0;
    for (int k = 1; k <= e.dim(); ++k) {
        acc = acc * z + sign * e.e(k);
        sign = -sign;
    }
    return acc;
}

namespace {

// p and p' at z for the monic polynomial with coefficients c_k = (-1)^k e_k.
std::pair<cplx, cplx> p_and_dp(const std::vector<double>& signed_coeffs, cplx z) {
    cplx p = 1.0;
    cplx dp = 0.0;
    for (double c : signed_coeffs) {
        dp = dp * z + p;
        p = p * z + c;
    }
    return {p, dp};
}

}  // namespace

RootSet roots_from_symmetric(const SymPolyPoint& e, double tol) {
    const int d = e.dim();
    if (!(tol > 0.0)) throw DomainViolation("tolerance must be positive");

    std::vector<double> signed_coeffs(static_cast<std::size_t>(d));
    double max_abs = 0.0;
    double sign = -1.0;
    for (int k = 1; k <= d; ++k) {
        signed_coeffs[static_cast<std::size_t>(k - 1)] = sign * e.e(k);
        max_abs = std::max(max_abs, e.e(k));
        sign = -sign;
    }

    std::vector<cplx> z(static_cast<std::size_t>(d));
    if (d == 1) {
        z[0] = e.e(1);
    } else {
        // Initial guesses on a circle of radius 1 + max|e_k|, angle-offset to
        // break conjugate symmetry of the iteration.
        const double radius = 1.0 + max_abs;
        for (int j = 0; j < d; ++j) {
            double angle = 2.0 * M_PI * (j + 0.25) / d + 0.42;
            z[static_cast<std::size_t>(j)] = radius * cplx(std::cos(angle), std::sin(angle));
        }
        const int max_iter = 200;
        bool stepped_converged = false;
        for (int iter = 0; iter < max_iter && !stepped_converged; ++iter) {
            stepped_converged = true;
            for (int j = 0; j < d; ++j) {
                auto [p, dp] = p_and_dp(signed_coeffs, z[static_cast<std::size_t>(j)]);
                cplx newton = (dp != cplx(0.0)) ? p / dp : cplx(0.0);
                cplx repulsion = 0.0;
                for (int i = 0; i < d; ++i) {
                    if (i != j) repulsion += 1.0 / (z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(i)]);
                }
                cplx denom = 1.0 - newton * repulsion;
                cplx step = (std::abs(denom) > 0.0) ? newton / denom : newton;
                z[static_cast<std::size_t>(j)] -= step;
                if (std::abs(step) > tol * (1.0 + std::abs(z[static_cast<std::size_t>(j)])))
                    stepped_converged = false;
            }
        }
    }

    // Multiple roots leave Aberth with O(eps^{1/m}) scatter. Collapse each
    // tight cloud onto the nearby simple root of p^{(m-1)}, recovered by a
    // few Newton steps from the cloud mean; this restores the symmetric
    // functions to machine accuracy while moving genuinely split roots by
    // less than their own uncertainty.
    {
        std::vector<bool> used(z.size(), false);
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (used[i]) continue;
            std::vector<std::size_t> members{i};
            used[i] = true;
            for (std::size_t j = i + 1; j < z.size(); ++j) {
                if (!used[j] && std::abs(z[j] - z[i]) <= 1e-6 * (1.0 + std::abs(z[i]))) {
                    members.push_back(j);
                    used[j] = true;
                }
            }
            const int m = static_cast<int>(members.size());
            if (m < 2) continue;
            cplx center = 0.0;
            for (std::size_t idx : members) center += z[idx];
            center /= static_cast<double>(m);
            // Horner for p^{(m-1)} and p^{(m)} (scaled by a common factorial).
            auto derivs = [&signed_coeffs, d, m](cplx w) {
                std::vector<cplx> der(static_cast<std::size_t>(m) + 1, 0.0);
                der[0] = 1.0;
                for (int t = 0; t < d; ++t) {
                    for (int r = m; r >= 1; --r)
                        der[static_cast<std::size_t>(r)] =
                            der[static_cast<std::size_t>(r)] * w + der[static_cast<std::size_t>(r - 1)];
                    der[0] = der[0] * w + signed_coeffs[static_cast<std::size_t>(t)];
                }
                return std::pair<cplx, cplx>(der[static_cast<std::size_t>(m - 1)],
                                             der[static_cast<std::size_t>(m)] * static_cast<double>(m));
            };
            cplx refined = center;
            bool ok = true;
            for (int it = 0; it < 4 && ok; ++it) {
                auto [dm1, dm] = derivs(refined);
                if (dm == cplx(0.0)) {
                    ok = false;
                    break;
                }
                cplx step = dm1 / dm;
                refined -= step;
                if (std::abs(refined - center) > 1e-5 * (1.0 + std::abs(center))) ok = false;
            }
            if (ok) {
                for (std::size_t idx : members) z[idx] = refined;
            }
        }
    }

    // Snap near-real roots and enforce exact conjugate pairing.
    for (auto& r : z) {
        if (std::abs(r.imag()) <= 1e-9 * (1.0 + std::abs(r))) r = cplx(r.real(), 0.0);
    }
    std::sort(z.begin(), z.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        if (z[i].imag() != 0.0 && z[i + 1].imag() != 0.0 &&
            std::abs(z[i] - std::conj(z[i + 1])) <=
                1e-7 * (1.0 + std::abs(z[i]))) {
            cplx mean = 0.5 * (z[i] + std::conj(z[i + 1]));
            z[i] = cplx(mean.real(), -std::abs(mean.imag()));
            z[i + 1] = std::conj(z[i]);
            ++i;
        }
    }

    // Backward verification: composing elementary_symmetric must reproduce e.
    {
        std::vector<cplx> es(static_cast<std::size_t>(d) + 1, 0.0);
        es[0] = 1.0;
        for (int i = 0; i < d; ++i) {
            for (int k = i + 1; k >= 1; --k)
                es[static_cast<std::size_t>(k)] += z[static_cast<std::size_t>(i)] * es[static_cast<std::size_t>(k - 1)];
        }
        double scale = std::max(1.0, max_abs);
        double accept = std::max(tol, 1e-13) * d * scale;
        for (int k = 1; k <= d; ++k) {
            double residual = std::abs(es[static_cast<std::size_t>(k)] - e.e(k));
            // The negated comparison also rejects NaN residuals (overflowed
            // or non-converged iterations).
            if (!(residual <= accept))
                throw ConvergenceFailure("root iteration did not reproduce the symmetric polynomials to tolerance");
        }
    }

    for (const auto& r : z) {
        if (r.imag() == 0.0 && r.real() < -tol)
            throw DomainViolation("polynomial with non-negative e_k produced a negative real root");
    }

    RootSet result;
    result.roots = z;
    result.classification = RootClassification::AllRealNonNegative;
    for (const auto& r : z) {
        if (r.imag() != 0.0) {
            result.classification = RootClassification::ConjugatePairs;
            break;
        }
    }

    // Multiplicity-aware view: greedy clustering at 1e-8 absolute.
    std::vector<bool> used(z.size(), false);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (used[i]) continue;
        cplx sum = z[i];
        int count = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            if (!used[j] && std::abs(z[j] - z[i]) <= 1e-8) {
                sum += z[j];
                ++count;
                used[j] = true;
            }
        }
        result.clusters.push_back({sum / static_cast<double>(count), count});
    }
    return result;
}

HalfAxisPoly::HalfAxisPoly(const SymPolyPoint& e)
    : d_(e.dim()), dprime_(0), e1_(e.e(1)), coeffs_(e.coeffs()) {
    for (int k = d_; k >= 1; --k) {
        if (e.e(k) > 0.0) {
            dprime_ = k;
            break;
        }
    }
    reduced_.push_back(1.0);
    for (int k = 1; k <= dprime_; ++k) reduced_.push_back(e.e(k));
}

double HalfAxisPoly::value(double tau) const {
    double acc = 1.0;
    for (double c : coeffs_) acc = acc * tau + c;
    return acc;
}

double HalfAxisPoly::log_value(double tau) const {
    if (tau > 1.0) {
        // q = tau^d * P(1/tau) with P(s) = 1 + e_1 s + ... + e_d s^d >= 1.
        double s = 1.0 / tau;
        double p = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = (p + *it) * s;
        return d_ * std::log(tau) + std::log1p(p);
    }
    // q = tau^{d-d'} * qr(tau) with qr(0) = e_{d'} > 0: no underflow in qr.
    double qr = 0.0;
    for (double c : reduced_) qr = qr * tau + c;
    return (d_ - dprime_) * std::log(tau) + std::log(qr);
}

double HalfAxisPoly::tau_dlog(double tau) const {
    if (tau > 1.0) {
        // tau q'/q = d - s P'(s)/P(s) at s = 1/tau.
        double s = 1.0 / tau;
        double p = 0.0;
        double sp = 0.0;  // s P'(s) = e_1 s + 2 e_2 s^2 + ...
        double sk = 1.0;
        for (int k = 1; k <= d_; ++k) {
            sk *= s;
            p += coeffs_[static_cast<std::size_t>(k - 1)] * sk;
            sp += k * coeffs_[static_cast<std::size_t>(k - 1)] * sk;
        }
        return d_ - sp / (1.0 + p);
    }
    double qr = 0.0;
    double dqr = 0.0;
    for (double c : reduced_) {
        dqr = dqr * tau + qr;
        qr = qr * tau + c;
    }
    return (d_ - dprime_) + tau * dqr / qr;
}

double HalfAxisPoly::log_ratio(double tau) const {
    if (tau > 1.0) {
        double s = 1.0 / tau;
        double p = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p = (p + *it) * s;
        // Single log of (q / tau^d) (tau / (tau+1))^{e1}; the product is
        // 1 + O(1/tau^2), so the cancellation happens before the log.
        return std::log((1.0 + p) * std::pow(tau / (tau + 1.0), e1_));
    }
    double qr = 0.0;
    for (double c : reduced_) qr = qr * tau + c;
    double exponent = (e1_ - dprime_) * std::log(tau);
    if (std::abs(exponent) < 600.0) {
        return std::log(qr * std::exp(exponent) / std::pow(tau + 1.0, e1_));
    }
    // Power would overflow the ratio; fall back to the sum of logs (no
    // cancellation at this end).
    return std::log(qr) + exponent - e1_ * std::log1p(tau);
}

double HalfAxisPoly::power_over_q(double tau, int a, int p) const {
    return std::exp(a * std::log(tau) - p * log_value(tau));
}

namespace {

// Horner sums in s = 1/tau used by the factored tail integrands:
//   P(s)  = e_1 s + ... + e_d s^d
//   B(s)  = e_1 + e_2 s + ... + e_d s^{d-1}
//   C(s)  = e_2 + e_3 s + ... + e_d s^{d-2}
//   P'(s) = e_1 + 2 e_2 s + ... + d e_d s^{d-1}
//   A(s)  = 2 e_2 + 3 e_3 s + ... + d e_d s^{d-2}
struct TailSums {
    double P, B, C, Pp, A;
};

TailSums tail_sums(const std::vector<double>& e, double s) {
    TailSums t{0.0, 0.0, 0.0, 0.0, 0.0};
    const int d = static_cast<int>(e.size());
    for (int k = d; k >= 1; --k) {
        double ek = e[static_cast<std::size_t>(k - 1)];
        t.B = t.B * s + ek;
        t.Pp = t.Pp * s + k * ek;
        if (k >= 2) {
            t.C = t.C * s + ek;
            t.A = t.A * s + k * ek;
        }
    }
    t.P = s * t.B;
    return t;
}

}  // namespace

double HalfAxisPoly::entropy_integrand(double tau) const {
    if (tau > 1.0) {
        // s^2 [A + P' - e1 B] / ((1+P)(1+s)); the naive form loses the
        // leading e1/tau terms to cancellation.
        double s = 1.0 / tau;
        TailSums t = tail_sums(coeffs_, s);
        return s * s * (t.A + t.Pp - e1_ * t.B) / ((1.0 + t.P) * (1.0 + s));
    }
    return -tau_dlog(tau) - e1_ / (tau + 1.0) + d_;
}

double HalfAxisPoly::subentropy_integrand(double tau) const {
    if (tau > 1.0) {
        // s^2 [C + B (1 - e1)] / ((1+P)(1+s)).
        double s = 1.0 / tau;
        TailSums t = tail_sums(coeffs_, s);
        return s * s * (t.C + t.B * (1.0 - e1_)) / ((1.0 + t.P) * (1.0 + s));
    }
    return -power_over_q(tau, d_, 1) - e1_ / (tau + 1.0) + 1.0;
}

double HalfAxisPoly::de1_integrand(double tau) const {
    if (tau > 1.0) {
        // s^2 [(1 - e1) - s C] / ((1+P)(1+s)).
        double s = 1.0 / tau;
        TailSums t = tail_sums(coeffs_, s);
        return s * s * ((1.0 - e1_) - s * t.C) / ((1.0 + t.P) * (1.0 + s));
    }
    return power_over_q(tau, d_ - 1, 1) - 1.0 / (tau + 1.0);
}

}  // namespace subent
