#include "subent/haar.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "subent/direct.hpp"
#include "subent/errors.hpp"

namespace subent {

namespace {

double pairwise_sum(const double* data, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

void validate(const HaarConfig& cfg) {
    if (cfg.dim < 2) throw DomainViolation("haar estimate requires dim >= 2");
    if (static_cast<int>(cfg.eigenvalues.size()) != cfg.dim)
        throw DomainViolation("eigenvalue count must equal dim");
    double sum = 0.0;
    for (double v : cfg.eigenvalues) {
        if (!(v >= 0.0)) throw DomainViolation("eigenvalues must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw DomainViolation("eigenvalues must sum to 1 within 1e-12");
    if (cfg.samples < 1) throw DomainViolation("samples must be >= 1");
}

}  // namespace

Unitary sample_haar_basis(int d, Rng& rng) {
    while (true) {
        Unitary u(static_cast<std::size_t>(d), std::vector<cplx>(static_cast<std::size_t>(d)));
        for (auto& row : u) {
            for (auto& v : row) v = cplx(rng.normal(), rng.normal());
        }
        // Modified Gram-Schmidt over columns, with one re-orthogonalization
        // pass; the implicit R has positive real diagonal, which is the
        // phase convention that makes the Ginibre image Haar.
        bool degenerate = false;
        for (int col = 0; col < d && !degenerate; ++col) {
            for (int pass = 0; pass < 2; ++pass) {
                for (int prev = 0; prev < col; ++prev) {
                    cplx proj = 0.0;
                    for (int r = 0; r < d; ++r)
                        proj += std::conj(u[static_cast<std::size_t>(r)][static_cast<std::size_t>(prev)]) *
                                u[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                    for (int r = 0; r < d; ++r)
                        u[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] -=
                            proj * u[static_cast<std::size_t>(r)][static_cast<std::size_t>(prev)];
                }
            }
            double norm = 0.0;
            for (int r = 0; r < d; ++r)
                norm += std::norm(u[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
            norm = std::sqrt(norm);
            if (norm < 1e-12) {
                degenerate = true;  // probability-zero draw, retry
                break;
            }
            for (int r = 0; r < d; ++r)
                u[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /= norm;
        }
        if (!degenerate) return u;
    }
}

double measurement_entropy(const ProbVector& eigs, const Unitary& U) {
    const int d = eigs.dim();
    if (static_cast<int>(U.size()) != d)
        throw DomainViolation("unitary dimension must match the eigenvalues");
    // Equal eigenvalues give p_i = 1/d for every basis; return the exact
    // value rather than reconstructing it through |U|^2 roundoff.
    bool all_equal = true;
    for (int j = 1; j < d; ++j) all_equal = all_equal && eigs[j] == eigs[0];
    if (all_equal) return entropy_direct(eigs);
    std::vector<double> p(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i) {
        double pi = 0.0;
        for (int j = 0; j < d; ++j)
            pi += std::norm(U[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) * eigs[j];
        p[static_cast<std::size_t>(i)] = std::max(pi, 0.0);
    }
    return entropy_direct(ProbVector(p));
}

double harmonic_tail(int d) {
    double s = 0.0;
    for (int k = 2; k <= d; ++k) s += 1.0 / k;
    return s;
}

HaarEstimate estimate_Q(const HaarConfig& cfg, int threads) {
    validate(cfg);
    const std::size_t n = static_cast<std::size_t>(cfg.samples);
    ProbVector eigs(cfg.eigenvalues);
    std::vector<double> hm(n);

    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            Rng rng = Rng::stream(cfg.seed, i);
            hm[i] = measurement_entropy(eigs, sample_haar_basis(cfg.dim, rng));
        }
    };
    if (threads <= 1 || n < 64) {
        worker(0, n);
    } else {
        std::vector<std::thread> pool;
        std::mutex mutex;
        std::exception_ptr failure;
        std::size_t chunk = (n + threads - 1) / static_cast<std::size_t>(threads);
        for (std::size_t lo = 0; lo < n; lo += chunk) {
            std::size_t hi = std::min(lo + chunk, n);
            pool.emplace_back([&worker, &mutex, &failure, lo, hi]() {
                try {
                    worker(lo, hi);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    HaarEstimate out;
    bool constant = true;
    for (std::size_t i = 1; i < n; ++i) constant = constant && hm[i] == hm[0];
    if (constant) {
        out.mean_HM = hm[0];
        out.std_error = 0.0;
    } else {
        out.mean_HM = pairwise_sum(hm.data(), n) / static_cast<double>(n);
        std::vector<double> dev(n);
        for (std::size_t i = 0; i < n; ++i) {
            double delta = hm[i] - out.mean_HM;
            dev[i] = delta * delta;
        }
        double var = pairwise_sum(dev.data(), n) / static_cast<double>(n - 1);
        out.std_error = std::sqrt(var / static_cast<double>(n));
    }
    out.implied_Q = out.mean_HM - harmonic_tail(cfg.dim);
    out.reference_Q = subentropy_direct(eigs);
    double diff = out.implied_Q - out.reference_Q;
    if (out.std_error > 0.0) {
        out.z_score = diff / out.std_error;
    } else {
        // Deterministic H_M (maximally mixed): exact agreement is a pass.
        out.z_score = std::abs(diff) <= 1e-9
                          ? 0.0
                          : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    return out;
}

}  // namespace subent
