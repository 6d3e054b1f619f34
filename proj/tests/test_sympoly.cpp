#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "subent/rng.hpp"
#include "subent/sympoly.hpp"

using namespace subent;

TEST_CASE("elementary symmetric polynomials") {
    SymPolyPoint e = elementary_symmetric(ProbVector{0.6, 0.4});
    CHECK(e.e(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.e(2) == doctest::Approx(0.24).epsilon(1e-14));

    SymPolyPoint unit = elementary_symmetric(ProbVector{1.0, 0.0, 0.0});
    CHECK(unit.e(1) == 1.0);
    CHECK(unit.e(2) == 0.0);
    CHECK(unit.e(3) == 0.0);

    SymPolyPoint half = elementary_symmetric(ProbVector{0.5, 0.5});
    CHECK(half.e(2) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("q and p evaluation") {
    SymPolyPoint e{1.0, 0.25};
    CHECK(q_eval(e, 1.0) == doctest::Approx(2.25));
    CHECK(q_eval(e, 0.0) == doctest::Approx(0.25));
    CHECK(q_eval(SymPolyPoint{1.0, 0.0}, 2.0) == doctest::Approx(6.0));
    CHECK(q_eval(SymPolyPoint{1.0, 0.0, 0.0}, 2.0) == doctest::Approx(12.0));

    CHECK(std::abs(p_eval(SymPolyPoint{1.0, 0.24}, cplx(0.6, 0.0))) < 1e-14);
    CHECK(std::abs(p_eval(SymPolyPoint{1.0, 0.0}, cplx(0.0, 0.0))) < 1e-14);
    CHECK(p_eval(e, cplx(1.0, 0.0)).real() == doctest::Approx(0.25));
}

TEST_CASE("p(z) = (-1)^d q(-z) at random points") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(rng.next() % 5);
        std::vector<double> coeffs(static_cast<std::size_t>(d));
        for (auto& c : coeffs) c = rng.uniform(0.0, 2.0);
        SymPolyPoint e(coeffs);
        double sign = (d % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < 100; ++i) {
            cplx z(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
            cplx lhs = p_eval(e, z);
            cplx rhs = sign * q_eval(e, -z);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("q(tau) >= e_d on the cone") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng.next() % 6);
        std::vector<double> coeffs(static_cast<std::size_t>(d));
        for (auto& c : coeffs) c = rng.uniform(0.0, 3.0);
        SymPolyPoint e(coeffs);
        for (int i = 0; i < 20; ++i) {
            double tau = rng.uniform(0.0, 10.0);
            CHECK(q_eval(e, tau) >= e.e(d) - 1e-12);
        }
    }
}

TEST_CASE("roots of a quadratic e-point") {
    RootSet rs = roots_from_symmetric(SymPolyPoint{1.0, 0.24});
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.classification == RootClassification::AllRealNonNegative);
    CHECK(rs.roots[0].real() == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(rs.roots[1].real() == doctest::Approx(0.6).epsilon(1e-10));
}

TEST_CASE("double root is clustered") {
    RootSet rs = roots_from_symmetric(SymPolyPoint{1.0, 0.25});
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].real() == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(rs.roots[1].real() == doctest::Approx(0.5).epsilon(1e-6));
    REQUIRE(rs.clusters.size() == 1);
    CHECK(rs.clusters[0].multiplicity == 2);
}

TEST_CASE("complex pair on the extended domain") {
    RootSet rs = roots_from_symmetric(SymPolyPoint{1.0, 0.3});
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.classification == RootClassification::ConjugatePairs);
    CHECK(rs.roots[0].real() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(std::abs(rs.roots[0].imag()) == doctest::Approx(0.22360679774997896).epsilon(1e-9));
    CHECK(rs.roots[0] == std::conj(rs.roots[1]));
}

TEST_CASE("round trip x -> e -> roots") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 2 + static_cast<int>(rng.next() % 7);
        std::vector<double> x;
        for (int attempt = 0;; ++attempt) {
            x = sample_simplex(rng, d);
            std::sort(x.begin(), x.end());
            bool distinct = true;
            for (std::size_t i = 0; i + 1 < x.size(); ++i)
                distinct = distinct && (x[i + 1] - x[i] > 1e-3);
            if (distinct || attempt > 500) break;
        }
        RootSet rs = roots_from_symmetric(elementary_symmetric(ProbVector(x)), 1e-12);
        REQUIRE(rs.classification == RootClassification::AllRealNonNegative);
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(rs.roots[i].real() == doctest::Approx(x[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("overflowing coefficients fail loudly") {
    // Coefficients beyond double range make the iteration meaningless; the
    // composed round trip must reject it rather than return junk.
    std::vector<double> wild(20);
    for (int k = 0; k < 20; ++k) wild[static_cast<std::size_t>(k)] = std::pow(10.0, 2.0 * (k + 1));
    CHECK_THROWS_AS(roots_from_symmetric(SymPolyPoint(wild)), ConvergenceFailure);
}

TEST_CASE("random cone points never yield negative real roots") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 + static_cast<int>(rng.next() % 5);
        std::vector<double> coeffs(static_cast<std::size_t>(d));
        for (auto& c : coeffs) c = rng.uniform(0.0, 2.0);
        CHECK_NOTHROW(roots_from_symmetric(SymPolyPoint(coeffs)));
    }
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(ProbVector({-0.1, 1.1}), DomainViolation);
    CHECK_THROWS_AS(SymPolyPoint({1.0, -0.2}), DomainViolation);
    CHECK_THROWS_AS(ProbVector(std::vector<double>{}), DomainViolation);
    CHECK_THROWS_AS(ProbVector(std::vector<double>(40, 0.1)), DomainViolation);
    CHECK_THROWS_AS(roots_from_symmetric(SymPolyPoint({1.0, 0.25}), -1.0), DomainViolation);

    CHECK_THROWS_AS(ComplexSymPolyPoint({cplx(1.0, 0.0), cplx(0.2, -0.5)}), DomainViolation);
    CHECK_THROWS_AS(ComplexSymPolyPoint({cplx(0.5, 0.0), cplx(0.2, 0.5)}), DomainViolation);
    CHECK_THROWS_AS(ComplexSymPolyPoint({cplx(1.0, 0.0), cplx(0.2, 0.5), cplx(0.1, 0.5)}),
                    DomainViolation);
    CHECK_NOTHROW(ComplexSymPolyPoint({cplx(1.0, 0.0), cplx(0.25, 0.0)}));
}
