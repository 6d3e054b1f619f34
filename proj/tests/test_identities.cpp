#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "subent/direct.hpp"
#include "subent/identities.hpp"
#include "subent/rng.hpp"

using namespace subent;

TEST_CASE("sum identities") {
    VerificationReport r = check_sum_identities(SymPolyPoint{1.0, 0.25}, 1e-9);
    CHECK(r.pass);
    CHECK(r.max_residual < 1e-9);

    // At (1, 0) the H identity forces dH/de_1 = -1 (zero-coefficient terms drop).
    VerificationReport r0 = check_sum_identities(SymPolyPoint{1.0, 0.0}, 1e-9);
    CHECK(r0.pass);

    VerificationReport r2 = check_sum_identities(SymPolyPoint{2.0, 1.0}, 1e-8);
    CHECK(r2.pass);

    // Extended-cone point (complex roots): the identity is analytic there too.
    VerificationReport rc = check_sum_identities(SymPolyPoint{1.0, 0.3}, 1e-8);
    CHECK(rc.pass);
}

TEST_CASE("c_bound closed values") {
    CHECK(c_bound(2, 2, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c_bound(3, 2, 1.0) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(c_bound(4, 4, 1.0) == doctest::Approx(64.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(c_bound(3, 1, 1.0), DomainViolation);
    CHECK_THROWS_AS(c_bound(3, 4, 1.0), DomainViolation);
    CHECK_THROWS_AS(c_bound(3, 2, 0.0), DomainViolation);
}

TEST_CASE("derivative bounds with equality at the uniform point") {
    VerificationReport r = check_derivative_bounds(SymPolyPoint{1.0, 0.25}, 2, 1e-8);
    CHECK(r.pass);
    // dH/de_2 = 2 meets c_{2,2} = 2 exactly, so the worst residual is ~0.
    CHECK(r.max_residual == doctest::Approx(0.0).epsilon(1e-9));

    CHECK(check_derivative_bounds(SymPolyPoint{1.0, 0.24}, 2, 1e-8).pass);
    CHECK(check_derivative_bounds(SymPolyPoint{1.0, 0.1, 0.001}, 3, 1e-8).pass);
    CHECK_THROWS_AS(check_derivative_bounds(SymPolyPoint{1.0, 0.0}, 2, 1e-8), DomainViolation);
}

TEST_CASE("duality between dQ and d2H") {
    CHECK(check_HQ_duality(SymPolyPoint{1.0, 0.25}, 1e-9).pass);
    CHECK(check_HQ_duality(SymPolyPoint{1.0, 0.2, 0.05}, 1e-8).pass);
}

TEST_CASE("H - Q lower bound") {
    BoundReport b = hq_difference_bound(SymPolyPoint{1.0, 0.24});
    CHECK(b.bound_value == doctest::Approx(0.48).epsilon(1e-12));
    CHECK(b.slack == doctest::Approx(0.4865581297297973 - 0.48).epsilon(1e-7));

    BoundReport b0 = hq_difference_bound(SymPolyPoint{1.0, 0.0});
    CHECK(b0.bound_value == 0.0);
    CHECK(std::abs(b0.slack) < 1e-10);

    // Equality at the uniform point, attained by the uniform spectrum.
    BoundReport bu = hq_difference_bound(SymPolyPoint{1.0, 0.25});
    CHECK(bu.bound_value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(bu.slack) < 1e-9);
    REQUIRE(bu.attained_at.has_value());
    CHECK((*bu.attained_at)[0] == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("canonical majorant pairs") {
    CanonicalPair p1 = canonical_majorant(1.0, 0.25, 2);
    CHECK(p1.a == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p1.b == doctest::Approx(0.5).epsilon(1e-12));

    CanonicalPair p2 = canonical_majorant(1.0, 0.24, 2);
    CHECK(p2.a == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(p2.b == doctest::Approx(0.6).epsilon(1e-12));

    CanonicalPair p3 = canonical_majorant(1.0, 1.0 / 3.0, 3);
    CHECK(p3.a == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
    CHECK(p3.b == doctest::Approx(1.0 / 3.0).epsilon(1e-7));

    CHECK_THROWS_AS(canonical_majorant(1.0, 0.3, 2), DomainViolation);
}

TEST_CASE("majorant dominance") {
    CHECK(check_majorant_dominance(ProbVector{0.5, 0.3, 0.2}).pass);
    // Already canonical: equality for all k.
    VerificationReport eq = check_majorant_dominance(ProbVector{1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK(eq.pass);
    CHECK(std::abs(eq.max_residual) < 1e-12);

    Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        CHECK(check_majorant_dominance(ProbVector(sample_simplex(rng, 5))).pass);
    }
}

TEST_CASE("two-coordinate upper bounds") {
    UpperBounds u1 = hq_upper_bounds(1.0, 0.25, 2);
    CHECK(u1.H_bound == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(u1.Q_bound == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-10));
    CHECK(u1.HU_bound == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    UpperBounds u2 = hq_upper_bounds(1.0, 0.24, 2);
    CHECK(u2.H_bound == doctest::Approx(0.6730116670092565).epsilon(1e-12));

    // d = 3: constraints give a = 1/6, b = 2/3.
    UpperBounds u3 = hq_upper_bounds(1.0, 0.25, 3);
    CHECK(u3.ab.a == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(u3.ab.b == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(u3.H_bound == doctest::Approx(0.8675632284814613).epsilon(1e-12));

    // Bound validity on random spectra with matching (e1, e2).
    Rng rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 + static_cast<int>(rng.next() % 4);
        ProbVector x(sample_simplex(rng, d));
        SymPolyPoint e = elementary_symmetric(x);
        UpperBounds ub = hq_upper_bounds(e.e(1), e.e(2), d);
        CHECK(entropy_direct(x) <= ub.H_bound + 1e-10);
        CHECK(subentropy_direct(x) <= ub.Q_bound + 1e-10);
        CHECK(ub.H_bound <= ub.HU_bound + 1e-9);
    }
}

TEST_CASE("Schur concavity") {
    VerificationReport r = check_schur_concavity(ProbVector{0.7, 0.3}, ProbVector{0.6, 0.4});
    CHECK(r.pass);
    CHECK(entropy_direct(ProbVector{0.7, 0.3}) == doctest::Approx(0.6108643020548935).epsilon(1e-10));

    CHECK(check_schur_concavity(ProbVector{1.0, 0.0}, ProbVector{0.5, 0.5}).pass);
    CHECK_THROWS_AS(
        check_schur_concavity(ProbVector{0.6, 0.25, 0.15}, ProbVector{0.55, 0.35, 0.10}),
        NotComparable);
    CHECK_THROWS_AS(check_schur_concavity(ProbVector{0.9, 0.3}, ProbVector{0.5, 0.5}),
                    NotComparable);
}

TEST_CASE("bipartite marginal dominance") {
    VerificationReport r = check_bipartite({{0.4, 0.1}, {0.2, 0.3}});
    CHECK(r.pass);
    CHECK(entropy_direct(ProbVector{0.4, 0.1, 0.2, 0.3}) ==
          doctest::Approx(1.2798542258336676).epsilon(1e-10));

    // Diagonal joint: equality H(A) = H(AB) = ln 2.
    VerificationReport diag = check_bipartite({{0.5, 0.0}, {0.0, 0.5}});
    CHECK(diag.pass);

    // Product distribution: H(AB) = H(A) + H(B).
    std::vector<std::vector<double>> prod = {{0.6 * 0.7, 0.6 * 0.3}, {0.4 * 0.7, 0.4 * 0.3}};
    CHECK(check_bipartite(prod).pass);
    CHECK(entropy_direct(ProbVector{prod[0][0], prod[0][1], prod[1][0], prod[1][1]}) ==
          doctest::Approx(entropy_direct(ProbVector{0.6, 0.4}) +
                          entropy_direct(ProbVector{0.7, 0.3}))
              .epsilon(1e-12));
}

TEST_CASE("scaling relations") {
    // theta = 2 on the uniform pair: H(1,1) = 0 = 2 ln 2 - 2 ln 2.
    VerificationReport r = check_scaling(ProbVector{0.5, 0.5}, 2.0);
    CHECK(r.pass);
    CHECK(std::abs(entropy_direct(ProbVector{1.0, 1.0})) < 1e-14);

    CHECK(check_scaling(ProbVector{0.6, 0.3, 0.1}, 3.0).pass);
    CHECK(check_scaling(ProbVector{0.6, 0.4}, 1.0).pass);  // identity scaling
    CHECK_THROWS_AS(check_scaling(ProbVector{0.5, 0.5}, 0.5), DomainViolation);
}
