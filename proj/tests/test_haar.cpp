#include <doctest.h>

#include <cmath>
#include <complex>

#include "subent/direct.hpp"
#include "subent/haar.hpp"

using namespace subent;

namespace {

double unitarity_defect(const Unitary& u) {
    int d = static_cast<int>(u.size());
    double worst = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            cplx dot = 0.0;
            for (int r = 0; r < d; ++r)
                dot += std::conj(u[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)]) *
                       u[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)];
            worst = std::max(worst, std::abs(dot - (a == b ? cplx(1.0) : cplx(0.0))));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("sampled bases are unitary and reproducible") {
    for (int d : {2, 3, 5}) {
        Rng rng(101);
        Unitary u = sample_haar_basis(d, rng);
        CHECK(unitarity_defect(u) < 1e-12);
    }
    Rng a(7), b(7), c(8);
    Unitary ua = sample_haar_basis(3, a);
    Unitary ub = sample_haar_basis(3, b);
    Unitary uc = sample_haar_basis(3, c);
    CHECK(ua[0][0] == ub[0][0]);
    CHECK(ua[2][1] == ub[2][1]);
    CHECK(ua[0][0] != uc[0][0]);
}

TEST_CASE("first-column moment matches the Haar value") {
    const int d = 3;
    const int draws = 10000;
    double mean = 0.0;
    for (int i = 0; i < draws; ++i) {
        Rng rng = Rng::stream(2025, static_cast<std::uint64_t>(i));
        Unitary u = sample_haar_basis(d, rng);
        mean += std::norm(u[0][0]);
    }
    mean /= draws;
    // |U_11|^2 ~ Beta(1, d-1): mean 1/d, var (d-1)/(d^2 (d+1)).
    double sigma = std::sqrt((d - 1.0) / (d * d * (d + 1.0)) / draws);
    CHECK(std::abs(mean - 1.0 / d) < 3.0 * sigma);
}

TEST_CASE("measurement entropy basics") {
    ProbVector eigs{1.0, 0.0};
    Unitary identity = {{cplx(1.0), cplx(0.0)}, {cplx(0.0), cplx(1.0)}};
    CHECK(measurement_entropy(eigs, identity) == doctest::Approx(0.0));

    double s = 1.0 / std::sqrt(2.0);
    Unitary balanced = {{cplx(s), cplx(s)}, {cplx(s), cplx(-s)}};
    CHECK(measurement_entropy(eigs, balanced) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    Rng rng(5);
    Unitary haar = sample_haar_basis(4, rng);
    ProbVector mixed{0.25, 0.25, 0.25, 0.25};
    CHECK(measurement_entropy(mixed, haar) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("maximally mixed estimate is exact with zero variance") {
    HaarConfig cfg{2, {0.5, 0.5}, 100, 7};
    HaarEstimate est = estimate_Q(cfg);
    CHECK(est.std_error == 0.0);
    CHECK(est.implied_Q == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-12));
    CHECK(est.z_score == 0.0);
}

TEST_CASE("estimates agree with subentropy within 4 sigma") {
    HaarConfig cfg2{2, {0.6, 0.4}, 20000, 7};
    HaarEstimate est2 = estimate_Q(cfg2);
    CHECK(est2.std_error > 0.0);
    CHECK(std::abs(est2.z_score) < 4.0);
    CHECK(est2.reference_Q == doctest::Approx(0.1864535372794592).epsilon(1e-10));

    HaarConfig cfg3{3, {0.5, 0.3, 0.2}, 20000, 7};
    HaarEstimate est3 = estimate_Q(cfg3);
    CHECK(std::abs(est3.z_score) < 4.0);
}

TEST_CASE("estimate is bit-identical across thread counts and deterministic in the seed") {
    HaarConfig cfg{3, {0.5, 0.3, 0.2}, 5000, 11};
    HaarEstimate a = estimate_Q(cfg, 1);
    HaarEstimate b = estimate_Q(cfg, 7);
    CHECK(a.mean_HM == b.mean_HM);
    CHECK(a.std_error == b.std_error);
    HaarEstimate c = estimate_Q(cfg, 1);
    CHECK(a.mean_HM == c.mean_HM);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(estimate_Q(HaarConfig{2, {0.6, 0.5}, 10, 1}), DomainViolation);
    CHECK_THROWS_AS(estimate_Q(HaarConfig{3, {0.5, 0.5}, 10, 1}), DomainViolation);
    CHECK_THROWS_AS(estimate_Q(HaarConfig{2, {0.5, 0.5}, 0, 1}), DomainViolation);
}
