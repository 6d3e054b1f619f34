#include "subent/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace subent {

namespace {

std::string describe(const std::vector<double>& v, const char* label) {
    std::ostringstream os;
    os << label << "=[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        os << buf;
    }
    os << "]";
    return os.str();
}

double log_binom(int n, int r) {
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

double xlnx(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

}  // namespace

void fold_residual(VerificationReport& report, double residual, const std::string& witness) {
    if (report.samples == 0 || residual > report.max_residual) {
        report.max_residual = residual;
        report.worst_witness = witness;
    }
    report.samples += 1;
    report.pass = report.max_residual <= report.tolerance;
}

void merge_report(VerificationReport& into, const VerificationReport& sub) {
    if (into.samples == 0 || sub.max_residual > into.max_residual) {
        into.max_residual = sub.max_residual;
        into.worst_witness = sub.worst_witness;
    }
    into.samples += sub.samples;
    into.pass = into.max_residual <= into.tolerance;
}

std::vector<std::vector<int>> index_multisets(int d, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 1);
    while (true) {
        out.push_back(cur);
        int pos = m - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == d) --pos;
        if (pos < 0) break;
        int v = ++cur[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < m; ++i) cur[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

VerificationReport check_sum_identities(const SymPolyPoint& e, double tol,
                                        const QuadratureConfig& cfg) {
    VerificationReport report;
    report.identity_name = "sum_identities";
    report.tolerance = tol;

    const int d = e.dim();
    const double H = entropy_e(e, cfg);
    const double Q = subentropy_e(e, cfg);

    double sum_weighted = 0.0;  // sum k e_k dH/de_k
    double sum_plain = 0.0;     // sum e_k dH/de_k
    double sum_fk = 0.0;        // f_k dH/df_k with f_k = e_k^{1/k}
    for (int k = 1; k <= d; ++k) {
        if (e.e(k) == 0.0) continue;
        double dh = dH(e, MultiIndex{std::vector<int>{k}}, cfg);
        sum_weighted += k * e.e(k) * dh;
        sum_plain += e.e(k) * dh;
        double fk = std::pow(e.e(k), 1.0 / k);
        sum_fk += fk * (k * std::pow(e.e(k), (k - 1.0) / k) * dh);
    }
    const double e1 = e.e(1);
    double rH = std::abs(H - (e1 + sum_weighted)) / std::max(1.0, std::abs(H));
    double rQ = std::abs(Q - (e1 + sum_plain)) / std::max(1.0, std::abs(Q));
    double rF = std::abs(sum_weighted - sum_fk) / std::max(1.0, std::abs(sum_weighted));
    std::string witness = describe(e.coeffs(), "e");
    fold_residual(report, rH, witness + " (H sum)");
    fold_residual(report, rQ, witness + " (Q sum)");
    fold_residual(report, rF, witness + " (f_k form)");
    report.samples = 1;
    return report;
}

double c_bound(int d, int k, double e1) {
    if (k < 2) throw DomainViolation("c_bound requires k >= 2");
    if (d < 2 || k > d) throw DomainViolation("c_bound requires 2 <= k <= d");
    if (!(e1 > 0.0)) throw DomainViolation("c_bound requires e1 > 0");
    double log_c = (k - 1) * std::log(static_cast<double>(d)) -
                   std::log(static_cast<double>(d - k + 1)) - log_binom(d - 1, k - 2) -
                   (k - 1) * std::log(e1);
    return std::exp(log_c);
}

VerificationReport check_derivative_bounds(const SymPolyPoint& e, int max_m, double tol,
                                           const QuadratureConfig& cfg) {
    if (!(e.e(e.dim()) > 0.0))
        throw DomainViolation("check_derivative_bounds requires e_d > 0");
    VerificationReport report;
    report.identity_name = "derivative_bounds";
    report.tolerance = tol;

    const int d = e.dim();
    const double e1 = e.e(1);
    const std::string witness = describe(e.coeffs(), "e");

    for (int k = 2; k <= d; ++k) {
        double cH = c_bound(d, k, e1);
        double vH = dH(e, MultiIndex{std::vector<int>{k}}, cfg);
        fold_residual(report, (cH - vH) / std::max(1.0, cH),
                      witness + " dH k=" + std::to_string(k));
        double cQ = c_bound(2 * d, k, 2.0 * e1);
        double vQ = dQ(e, MultiIndex{std::vector<int>{k}}, cfg);
        fold_residual(report, (cQ - vQ) / std::max(1.0, cQ),
                      witness + " dQ k=" + std::to_string(k));
    }
    for (int m = 2; m <= max_m; ++m) {
        const double flip = (m % 2 == 1) ? 1.0 : -1.0;
        for (const auto& idx : index_multisets(d, m)) {
            MultiIndex mi(idx);
            double cH = c_bound(m * d, mi.sum(), m * e1);
            double vH = flip * dH(e, mi, cfg);
            fold_residual(report, (cH - vH) / std::max(1.0, cH),
                          witness + " dH m=" + std::to_string(m) + " K=" + std::to_string(mi.sum()));
            double cQ = c_bound((m + 1) * d, mi.sum(), (m + 1) * e1);
            double vQ = flip * dQ(e, mi, cfg);
            fold_residual(report, (cQ - vQ) / std::max(1.0, cQ),
                          witness + " dQ m=" + std::to_string(m) + " K=" + std::to_string(mi.sum()));
        }
    }
    return report;
}

VerificationReport check_HQ_duality(const SymPolyPoint& e, double tol,
                                    const QuadratureConfig& cfg) {
    VerificationReport report;
    report.identity_name = "hq_duality";
    report.tolerance = tol;
    const std::string witness = describe(e.coeffs(), "e");

    for (int k = 2; k <= e.dim(); ++k) {
        double lhs = -dQ(e, MultiIndex{std::vector<int>{k}}, cfg);
        for (int l = 1; l <= k / 2; ++l) {
            int m = k - l;
            double rhs = dH(e, MultiIndex{std::vector<int>{l, m}}, cfg);
            double res = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
            fold_residual(report, res,
                          witness + " k=" + std::to_string(k) + " (l,m)=(" +
                              std::to_string(l) + "," + std::to_string(m) + ")");
        }
    }
    return report;
}

BoundReport hq_difference_bound(const SymPolyPoint& e, const QuadratureConfig& cfg) {
    const int d = e.dim();
    const double e1 = e.e(1);
    double bound = 0.0;
    for (int k = 2; k <= d; ++k) {
        if (e.e(k) == 0.0) continue;
        double log_term = (k - 1) * std::log(static_cast<double>(d)) - log_binom(d - 1, k - 1) -
                          (k - 1) * std::log(e1);
        bound += e.e(k) * std::exp(log_term);
    }
    double diff = entropy_e(e, cfg) - subentropy_e(e, cfg);

    // First-term consequence is implied but checked explicitly.
    if (d >= 2 && e.e(2) > 0.0) {
        double first = d * e.e(2) / ((d - 1) * e1);
        if (first > bound + 1e-12 * std::max(1.0, bound))
            throw DomainViolation("internal: first bound term exceeds the full sum");
    }

    BoundReport out;
    out.bound_value = bound;
    out.slack = diff - bound;
    if (std::abs(out.slack) <= 1e-8) {
        // Equality case (uniform spectrum); report the attaining vector.
        try {
            RootSet rs = roots_from_symmetric(e);
            if (rs.classification == RootClassification::AllRealNonNegative) {
                std::vector<double> x;
                for (const auto& z : rs.roots) x.push_back(std::max(0.0, z.real()));
                out.attained_at = ProbVector(x);
            }
        } catch (const ConvergenceFailure&) {
        }
    }
    return out;
}

CanonicalPair canonical_majorant(double e1, double e2, int d) {
    if (d < 2) throw DomainViolation("canonical_majorant requires d >= 2");
    if (!(e1 >= 0.0) || !(e2 >= 0.0))
        throw DomainViolation("canonical_majorant requires e1, e2 >= 0");
    double disc = (d - 1.0) * (d - 1.0) * e1 * e1 - 2.0 * e2 * d * (d - 1.0);
    if (disc < 0.0)
        throw DomainViolation("no real canonical set: (d-1)^2 e1^2 < 2 e2 d (d-1)");
    double a = ((d - 1.0) * e1 - std::sqrt(disc)) / (d * (d - 1.0));
    if (a < 0.0) a = 0.0;  // guard roundoff at e2 = 0
    double b = e1 - (d - 1.0) * a;
    return CanonicalPair{a, b};
}

VerificationReport check_majorant_dominance(const ProbVector& x, double tol) {
    VerificationReport report;
    report.identity_name = "majorant_dominance";
    report.tolerance = tol;

    const int d = x.dim();
    SymPolyPoint e = elementary_symmetric(x);
    CanonicalPair ab = canonical_majorant(e.e(1), d >= 2 ? e.e(2) : 0.0, d);
    std::vector<double> canon(static_cast<std::size_t>(d), ab.a);
    canon.back() = ab.b;
    SymPolyPoint f = elementary_symmetric(ProbVector(canon));

    const std::string witness = describe(x.values(), "x");
    for (int k = 1; k <= d; ++k) {
        double res = (e.e(k) - f.e(k)) / std::max(1.0, e.e(k));
        fold_residual(report, res, witness + " k=" + std::to_string(k));
    }
    return report;
}

UpperBounds hq_upper_bounds(double e1, double e2, int d) {
    if (!(e1 > 0.0)) throw DomainViolation("hq_upper_bounds requires e1 > 0");
    CanonicalPair ab = canonical_majorant(e1, e2, d);
    std::vector<double> canon(static_cast<std::size_t>(d), ab.a);
    canon.back() = ab.b;

    UpperBounds out;
    out.ab = ab;
    out.H_bound = -(d - 1) * xlnx(ab.a) - xlnx(ab.b);
    out.Q_bound = subentropy_direct(ProbVector(canon));
    out.HU_bound = -e1 * std::log(e1) +
                   std::log(static_cast<double>(d)) * std::sqrt(2.0 * d * e2 / (d - 1.0));
    return out;
}

namespace {

// Majorization by sorted partial sums; returns +1 if x majorizes y, -1 if y
// majorizes x, 0 if incomparable. Totals must agree to 1e-12 * scale.
int majorization_order(const ProbVector& x, const ProbVector& y) {
    std::vector<double> a = x.values();
    std::vector<double> b = y.values();
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    double ta = 0.0, tb = 0.0;
    for (double v : a) ta += v;
    for (double v : b) tb += v;
    double scale = std::max({1.0, ta, tb});
    if (std::abs(ta - tb) > 1e-12 * scale)
        throw NotComparable("majorization requires equal totals");
    double pa = 0.0, pb = 0.0;
    bool x_ge = true, y_ge = true;
    const double slop = 1e-12 * scale;
    for (std::size_t i = 0; i + 1 < std::max(a.size(), b.size()); ++i) {
        pa += i < a.size() ? a[i] : 0.0;
        pb += i < b.size() ? b[i] : 0.0;
        if (pa < pb - slop) x_ge = false;
        if (pb < pa - slop) y_ge = false;
    }
    if (x_ge) return 1;
    if (y_ge) return -1;
    return 0;
}

}  // namespace

VerificationReport check_schur_concavity(const ProbVector& x, const ProbVector& y,
                                         double tol) {
    VerificationReport report;
    report.identity_name = "schur_concavity";
    report.tolerance = tol;

    int order = majorization_order(x, y);
    if (order == 0) throw NotComparable("neither vector majorizes the other");
    const ProbVector& major = order > 0 ? x : y;
    const ProbVector& minor = order > 0 ? y : x;

    std::string witness = describe(major.values(), "major") + " " + describe(minor.values(), "minor");
    double scaleH = std::max(1.0, entropy_direct(minor));
    fold_residual(report, (entropy_direct(major) - entropy_direct(minor)) / scaleH,
                  witness + " (H)");
    double scaleQ = std::max(1.0, subentropy_direct(minor));
    fold_residual(report, (subentropy_direct(major) - subentropy_direct(minor)) / scaleQ,
                  witness + " (Q)");
    return report;
}

VerificationReport check_bipartite(const std::vector<std::vector<double>>& joint,
                                   double tol, const QuadratureConfig& cfg) {
    VerificationReport report;
    report.identity_name = "bipartite";
    report.tolerance = tol;
    if (joint.empty() || joint.front().empty())
        throw DomainViolation("joint distribution must be non-empty");

    std::vector<double> marginal;
    std::vector<double> flat;
    for (const auto& row : joint) {
        if (row.size() != joint.front().size())
            throw DomainViolation("joint distribution must be rectangular");
        double sum = 0.0;
        for (double v : row) {
            if (!(v >= 0.0)) throw DomainViolation("joint entries must be non-negative");
            sum += v;
            flat.push_back(v);
        }
        marginal.push_back(sum);
    }
    ProbVector A(marginal);
    ProbVector AB(flat);
    const std::string witness = describe(flat, "joint");

    fold_residual(report, entropy_direct(A) - entropy_direct(AB), witness + " (H)");
    fold_residual(report, subentropy_direct(A) - subentropy_direct(AB), witness + " (Q)");

    SymPolyPoint eA = elementary_symmetric(A);
    SymPolyPoint eAB = elementary_symmetric(AB);
    const int dA = A.dim();
    bool positive = true;
    for (double v : flat) positive = positive && v > 0.0;
    if (positive) {
        for (int m = 1; m <= 2; ++m) {
            const double flip = (m % 2 == 1) ? 1.0 : -1.0;
            for (const auto& idx : index_multisets(dA, m)) {
                if (m == 1 && idx[0] == 1) continue;  // dH/de_1 has no definite sign
                MultiIndex mi(idx);
                double va = flip * dH(eA, mi, cfg);
                double vab = flip * dH(eAB, mi, cfg);
                fold_residual(report, (vab - va) / std::max(1.0, std::abs(va)),
                              witness + " dH m=" + std::to_string(m) +
                                  " K=" + std::to_string(mi.sum()));
                double qa = flip * dQ(eA, mi, cfg);
                double qab = flip * dQ(eAB, mi, cfg);
                fold_residual(report, (qab - qa) / std::max(1.0, std::abs(qa)),
                              witness + " dQ m=" + std::to_string(m) +
                                  " K=" + std::to_string(mi.sum()));
            }
        }
    }
    return report;
}

VerificationReport check_scaling(const ProbVector& x, double theta, double tol,
                                 const QuadratureConfig& cfg) {
    if (!(theta >= 1.0)) throw DomainViolation("check_scaling requires theta >= 1");
    VerificationReport report;
    report.identity_name = "scaling";
    report.tolerance = tol;

    const std::string witness = describe(x.values(), "x") + " theta=" + std::to_string(theta);
    double e1 = 0.0;
    std::vector<double> scaled = x.values();
    for (auto& v : scaled) {
        e1 += v;
        v *= theta;
    }
    ProbVector xs(scaled);
    const double corr = theta * e1 * std::log(theta);

    double H = entropy_direct(x), Hs = entropy_direct(xs);
    double Q = subentropy_direct(x), Qs = subentropy_direct(xs);
    fold_residual(report, std::abs(Hs - (theta * H - corr)) / std::max(1.0, std::abs(Hs)),
                  witness + " (H x-scaling)");
    fold_residual(report, std::abs(Qs - (theta * Q - corr)) / std::max(1.0, std::abs(Qs)),
                  witness + " (Q x-scaling)");
    fold_residual(report,
                  std::abs((Qs - theta * Q) - (Hs - theta * H)) /
                      std::max(1.0, std::abs(Hs - theta * H)),
                  witness + " (H/Q difference relation)");

    // e-space inequalities via the half-axis evaluators on both sides. Both
    // run downward: value(theta e) <= theta value(e). (Expanding the
    // difference of the half-axis integrands gives the kernel
    // theta (theta-1) xi (d xi - tau xi') / (q (tau^d + theta xi)) with
    // xi = q - tau^d, and d xi - tau xi' = sum k e_k tau^{d-k} >= 0.)
    SymPolyPoint e = elementary_symmetric(x);
    std::vector<double> ce = e.coeffs();
    for (auto& v : ce) v *= theta;
    SymPolyPoint te(ce);
    double He = entropy_e(e, cfg), Hte = entropy_e(te, cfg);
    double Qe = subentropy_e(e, cfg), Qte = subentropy_e(te, cfg);
    fold_residual(report, (Qte - theta * Qe) / std::max(1.0, std::abs(theta * Qe)),
                  witness + " (Q e-scaling)");
    fold_residual(report, (Hte - theta * He) / std::max(1.0, std::abs(theta * He)),
                  witness + " (H e-scaling)");
    return report;
}

}  // namespace subent
