#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "subent/contour.hpp"
#include "subent/direct.hpp"
#include "subent/rng.hpp"

using namespace subent;

TEST_CASE("contour entropy matches direct evaluation") {
    ContourSpec c{0.5, 0.2, 512};
    ContourDiagnostics diag;
    CHECK(entropy_contour(SymPolyPoint{1.0, 0.24}, c, &diag) ==
          doctest::Approx(0.6730116670092565).epsilon(1e-10));
    CHECK(diag.imag_residual < 1e-9);
    CHECK(entropy_contour(SymPolyPoint{1.0, 0.25}, c) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-10));
    // Roots {0.6, 0.3}: -0.6 ln 0.6 - 0.3 ln 0.3.
    CHECK(entropy_contour(SymPolyPoint{0.9, 0.18}, ContourSpec{0.45, 0.2, 512}) ==
          doctest::Approx(0.6676872155573752).epsilon(1e-10));
}

TEST_CASE("contour subentropy has no coincidence singularity") {
    ContourSpec c{0.5, 0.2, 512};
    CHECK(subentropy_contour(SymPolyPoint{1.0, 0.24}, c) ==
          doctest::Approx(0.1864535372794592).epsilon(1e-10));
    CHECK(subentropy_contour(SymPolyPoint{1.0, 0.25}, c) ==
          doctest::Approx(0.1931471805599453).epsilon(1e-10));
}

TEST_CASE("contour violations") {
    // Root at the origin cannot be enclosed while excluding it.
    CHECK_THROWS_AS(entropy_contour(SymPolyPoint{1.0, 0.0}, ContourSpec{0.5, 0.2, 512}),
                    ContourViolation);
    // Radius >= center touches the closed negative axis.
    CHECK_THROWS_AS(entropy_contour(SymPolyPoint{1.0, 0.24}, ContourSpec{0.5, 0.5, 512}),
                    ContourViolation);
    // Root within 1e-6 of the circle.
    CHECK_THROWS_AS(entropy_contour(SymPolyPoint{1.0, 0.24}, ContourSpec{0.5, 0.1000005, 512}),
                    ContourViolation);
    // Complex roots are outside this oracle's domain.
    CHECK_THROWS_AS(entropy_contour(SymPolyPoint{1.0, 0.3}, ContourSpec{0.5, 0.2, 512}),
                    ContourViolation);
    CHECK_THROWS_AS(entropy_contour(SymPolyPoint{1.0, 0.24}, ContourSpec{0.5, 0.2, 8}),
                    ContourViolation);
}

TEST_CASE("spectral convergence when well separated") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + static_cast<int>(rng.next() % 5);
        std::vector<double> x(static_cast<std::size_t>(d));
        double sum = 0.0;
        for (auto& v : x) {
            v = rng.uniform(0.5, 1.5);
            sum += v;
        }
        for (auto& v : x) v /= sum;
        std::sort(x.begin(), x.end());
        bool separated = true;
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
            separated = separated && x[i + 1] - x[i] > 0.01;
        if (!separated) continue;
        SymPolyPoint e = elementary_symmetric(ProbVector(x));
        double h256 = entropy_contour(e, auto_contour(e, 256));
        double h512 = entropy_contour(e, auto_contour(e, 512));
        CHECK(std::abs(h512 - h256) < 1e-10);
    }
}

TEST_CASE("agreement with direct evaluation on random spectra") {
    Rng rng(37);
    int done = 0;
    while (done < 30) {
        int d = 2 + static_cast<int>(rng.next() % 5);
        std::vector<double> x(static_cast<std::size_t>(d));
        double sum = 0.0;
        for (auto& v : x) {
            v = rng.uniform(0.5, 1.5);
            sum += v;
        }
        for (auto& v : x) v /= sum;
        std::vector<double> sorted = x;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            ok = ok && sorted[i + 1] - sorted[i] > 0.012;
        if (!ok) continue;
        ++done;
        SymPolyPoint e = elementary_symmetric(ProbVector(x));
        CHECK(std::abs(entropy_contour(e, auto_contour(e)) - entropy_direct(ProbVector(x))) <
              1e-9);
        CHECK(std::abs(subentropy_contour(e, auto_contour(e)) -
                       subentropy_direct(ProbVector(x))) < 1e-9);
    }
}
