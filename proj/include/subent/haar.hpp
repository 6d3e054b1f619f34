#pragma once

#include <cstdint>
#include <vector>

#include "subent/rng.hpp"
#include "subent/sympoly.hpp"

namespace subent {

struct HaarConfig {
    int dim;
    std::vector<double> eigenvalues;  // must sum to 1 within 1e-12
    long long samples;
    std::uint64_t seed;
};

struct HaarEstimate {
    double mean_HM;
    double std_error;
    double implied_Q;    // mean_HM - (1/2 + ... + 1/d)
    double reference_Q;  // subentropy of the eigenvalues
    double z_score;
};

using Unitary = std::vector<std::vector<cplx>>;  // row-major, U[row][col]

/// Haar-distributed unitary: complex Ginibre matrix orthonormalized by
/// modified Gram-Schmidt, whose triangular factor has positive real
/// diagonal by construction.
Unitary sample_haar_basis(int d, Rng& rng);

/// Shannon entropy of p_i = sum_j |U_{ji}|^2 eigs_j.
double measurement_entropy(const ProbVector& eigs, const Unitary& U);

/// 1/2 + 1/3 + ... + 1/d (zero for d = 1).
double harmonic_tail(int d);

/// Monte Carlo average of the measurement entropy over Haar bases; sample i
/// draws from the stream derived from (seed, i), and the reduction is a
/// fixed pairwise tree, so the estimate is bit-identical for any thread
/// count.
HaarEstimate estimate_Q(const HaarConfig& cfg, int threads = 1);

}  // namespace subent
