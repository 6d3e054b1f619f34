#include <doctest.h>

#include <cmath>
#include <complex>

#include "subent/quadrature.hpp"

using namespace subent;

TEST_CASE("half-axis reference integrals") {
    CHECK(integrate_half_axis([](double t) { return std::exp(-t); }) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_half_axis([](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); }) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_half_axis([](double t) { return 1.0 / (1.0 + t * t); }) ==
          doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK(integrate_half_axis([](double t) { return t * std::exp(-t * t); }) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // Algebraic half-power tail: the mapped integrand has a z^{-1/2}
    // endpoint singularity, which bisection resolves only slowly; ask for a
    // tolerance it can meet within the width floor.
    QuadratureConfig slow;
    slow.rel_tol = 1e-7;
    slow.abs_tol = 1e-9;
    slow.max_subdivisions = 2000;
    CHECK(integrate_half_axis([](double t) { return std::pow(1.0 + t, -1.5); }, slow) ==
          doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("integrable log singularity at the origin") {
    // integral_0^inf e^{-t} ln t dt = -gamma
    double gamma = 0.57721566490153286;
    CHECK(integrate_half_axis([](double t) { return std::exp(-t) * std::log(t); }) ==
          doctest::Approx(-gamma).epsilon(1e-10));
}

TEST_CASE("divergent integrand fails loudly") {
    CHECK_THROWS_AS(integrate_half_axis([](double t) { return 1.0 / (1.0 + t); }),
                    QuadratureFailure);
}

TEST_CASE("complex integrand") {
    std::complex<double> val = integrate_half_axis_complex(
        [](double t) { return std::exp(-std::complex<double>(1.0, 1.0) * t); });
    CHECK(val.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(val.imag() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("diagnostics are populated") {
    QuadratureDiagnostics diag;
    integrate_half_axis([](double t) { return std::exp(-t); }, {}, &diag);
    CHECK(diag.panels >= 1);
    CHECK(diag.evaluations >= 15);
}

TEST_CASE("tolerances are honored") {
    QuadratureConfig loose;
    loose.rel_tol = 1e-4;
    loose.abs_tol = 1e-6;
    double v = integrate_half_axis([](double t) { return std::exp(-t); }, loose);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-3));
}
