// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/quadrature.hpp>

#include <doctest.h>

#include <cmath>

using namespace dirac1d;

TEST_CASE("polynomial and trig integrals") {
  auto sq = [](Real x) { return x * x; };
  CHECK(integrate(sq, 0.0, 1.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  auto s = [](Real x) { return std::sin(x); };
  CHECK(integrate(s, 0.0, M_PI).value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate(sq, 1.0, 1.0).value == 0.0);
  // reversed orientation
  CHECK(integrate(sq, 1.0, 0.0).value == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("gaussian moment used by the threshold integrals") {
  // integral_0^inf y^2 e^{-y^2} dy = sqrt(pi)/4
  auto f = [](Real y) { return y * y * std::exp(-y * y); };
  const Real val = integrate(f, 1e-10, 12.0, 1e-12).value;
  CHECK(val == doctest::Approx(std::sqrt(M_PI) / 4.0).epsilon(1e-11));
}

TEST_CASE("sharply peaked integrand is subdivided") {
  auto peak = [](Real x) { return std::exp(-1e4 * (x - 0.3) * (x - 0.3)); };
  const Real exact = std::sqrt(M_PI) / 100.0;  // full-line value; tails negligible
  CHECK(integrate(peak, 0.0, 1.0, 1e-11).value == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("overflowing integrand reports divergence") {
  auto grows = [](Real x) { return std::exp(x * x); };
  CHECK_THROWS_AS(integrate(grows, 0.0, 40.0), DivergentIntegralError);
}
