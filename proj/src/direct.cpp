#include "subent/direct.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace subent {

namespace {

// Relative gap below which values are merged into one confluent node. The
// distinct-value formula loses about half the significant digits as a gap
// closes; this threshold keeps both branches at >= 1e-9.
constexpr double kClusterRelGap = 1e-6;

// j-th derivative of g(t) = -t^d ln t for j < d:
//   g^(j)(t) = -t^(d-j) (a_j ln t + b_j),
//   a_0 = 1, b_0 = 0, a_{j+1} = (d-j) a_j, b_{j+1} = (d-j) b_j + a_j.
// All of these vanish as t -> 0+, which is the limit used for clusters at 0.
double g_derivative(int d, int j, double t) {
    if (j == 0) {
        return (t == 0.0) ? 0.0 : -std::pow(t, d) * std::log(t);
    }
    double a = 1.0;
    double b = 0.0;
    for (int i = 0; i < j; ++i) {
        double a_next = (d - i) * a;
        b = (d - i) * b + a;
        a = a_next;
    }
    if (t == 0.0) return 0.0;
    return -std::pow(t, d - j) * (a * std::log(t) + b);
}

}  // namespace

double entropy_direct(const ProbVector& x) {
    double h = 0.0;
    for (double v : x.values()) {
        if (v > 0.0) h -= v * std::log(v);
    }
    return h;
}

double subentropy_direct(const ProbVector& x) {
    const int d = x.dim();
    std::vector<double> z = x.values();
    std::sort(z.begin(), z.end());

    // Merge clusters (relative gap below threshold) onto their mean; the
    // symmetric snap cancels the first-order perturbation.
    std::size_t i = 0;
    while (i < z.size()) {
        std::size_t j = i + 1;
        while (j < z.size() &&
               z[j] - z[i] <= kClusterRelGap * std::max(z[j], 1e-300)) {
            ++j;
        }
        if (j - i > 1) {
            double mean = 0.0;
            for (std::size_t k = i; k < j; ++k) mean += z[k];
            mean /= static_cast<double>(j - i);
            for (std::size_t k = i; k < j; ++k) z[k] = mean;
        }
        i = j;
    }

    // Confluent (Hermite) divided-difference tableau for g(t) = -t^d ln t.
    std::vector<double> col(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) col[k] = g_derivative(d, 0, z[k]);
    double factorial = 1.0;
    for (int order = 1; order < d; ++order) {
        factorial *= order;
        for (std::size_t k = 0; k + order < z.size(); ++k) {
            double lo = z[k];
            double hi = z[k + static_cast<std::size_t>(order)];
            if (hi == lo) {
                col[k] = g_derivative(d, order, lo) / factorial;
            } else {
                col[k] = (col[k + 1] - col[k]) / (hi - lo);
            }
        }
        col.resize(col.size() - 1);
    }
    return col[0];
}

EntropyPair entropy_pair(const ProbVector& x) {
    return EntropyPair{entropy_direct(x), subentropy_direct(x)};
}

}  // namespace subent
