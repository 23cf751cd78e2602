// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/potential.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dirac1d;

TEST_CASE("cornell evaluation") {
  CHECK(eval(PotentialTerm::Cornell(1, 1), 1.0) == doctest::Approx(0.0));
  CHECK(eval(PotentialTerm::Zero(), 5.0) == 0.0);
  CHECK(eval(PotentialTerm::Cornell(2, 0.5), 2.0) == doctest::Approx(0.0));
  CHECK(eval(PotentialTerm::Constant(3.5), 0.1) == 3.5);
  CHECK(eval(PotentialTerm::Linear(2), 3.0) == 6.0);
  CHECK(eval(PotentialTerm::Coulomb(2), 4.0) == doctest::Approx(-0.5));
}

TEST_CASE("singular terms reject x <= 0") {
  CHECK_THROWS_AS(eval(PotentialTerm::Cornell(1, 1), 0.0), DomainError);
  CHECK_THROWS_AS(eval(PotentialTerm::Cornell(1, 1), -2.0), DomainError);
  CHECK_THROWS_AS(eval(PotentialTerm::Coulomb(1), 0.0), DomainError);
  // regular terms are fine on the whole axis
  CHECK_NOTHROW(eval(PotentialTerm::Linear(1), -1.0));
  CHECK_NOTHROW(eval(PotentialTerm::Zero(), 0.0));
}

TEST_CASE("cornell equals coulomb plus linear exactly") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> pos(1e-3, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const Real a = coef(rng), b = coef(rng), x = pos(rng);
    const Real whole = eval(PotentialTerm::Cornell(a, b), x);
    const Real parts = eval(PotentialTerm::Coulomb(a), x) + eval(PotentialTerm::Linear(b), x);
    CHECK(whole == parts);
  }
}

TEST_CASE("legacy parameter mapping") {
  const CornellParams p1 = from_legacy_params(1.0, -1.0, 1.0);
  CHECK(p1.a == 1.0);
  CHECK(p1.b == 1.0);
  const CornellParams p2 = from_legacy_params(0.0, 0.0, 1.0);
  CHECK(p2.a == 0.0);
  CHECK(p2.b == 0.0);
  const CornellParams p3 = from_legacy_params(2.0, -0.5, 3.0);
  CHECK(p3.a == 0.5);
  CHECK(p3.b == 6.0);
}

TEST_CASE("legacy mapping reproduces m w x + g / x on a grid") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coef(0.1, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Real omega = coef(rng), g = -coef(rng), m = coef(rng);
    const CornellParams cp = from_legacy_params(omega, g, m);
    const PotentialTerm term = PotentialTerm::Cornell(cp.a, cp.b);
    for (int i = 1; i <= 20; ++i) {
      const Real x = 0.05 * i;
      const Real legacy = m * omega * x + g / x;
      CHECK(eval(term, x) == doctest::Approx(legacy).epsilon(1e-14));
    }
  }
}

TEST_CASE("sigma and delta combinations") {
  LorentzPotentials consts{PotentialTerm::Constant(3), PotentialTerm::Constant(1),
                           PotentialTerm::Zero()};
  auto [s1, d1] = sigma_delta(consts, 0.7);
  CHECK(s1 == 4.0);
  CHECK(d1 == 2.0);

  LorentzPotentials zero{};
  auto [s2, d2] = sigma_delta(zero, 3.0);
  CHECK(s2 == 0.0);
  CHECK(d2 == 0.0);

  LorentzPotentials lin{PotentialTerm::Linear(1), PotentialTerm::Linear(-1),
                        PotentialTerm::Zero()};
  auto [s3, d3] = sigma_delta(lin, 2.0);
  CHECK(s3 == doctest::Approx(0.0));
  CHECK(d3 == doctest::Approx(4.0));
}

TEST_CASE("exact derivative and antiderivative") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.2, 8.0);
  const Real h = 1e-5;
  for (int i = 0; i < 200; ++i) {
    const PotentialTerm term = PotentialTerm::Cornell(coef(rng), coef(rng));
    const Real x = pos(rng);
    const Real fd_deriv = (term.value(x + h) - term.value(x - h)) / (2 * h);
    CHECK(term.derivative(x) == doctest::Approx(fd_deriv).epsilon(1e-7));
    const Real fd_from_anti = (term.antiderivative(x + h) - term.antiderivative(x - h)) / (2 * h);
    CHECK(term.value(x) == doctest::Approx(fd_from_anti).epsilon(1e-7));
  }
}

TEST_CASE("structural predicates") {
  CHECK(PotentialTerm::Zero().is_zero());
  CHECK(PotentialTerm::Constant(0).is_zero());
  CHECK(PotentialTerm::Linear(0).is_zero());
  CHECK(PotentialTerm::Cornell(0, 0).is_zero());
  CHECK_FALSE(PotentialTerm::Cornell(1, 1).is_zero());
  CHECK(PotentialTerm::Constant(2).is_constant());
  CHECK_FALSE(PotentialTerm::Linear(1).is_constant());
}

TEST_CASE("physical params validation") {
  CHECK_NOTHROW(validate(PhysicalParams{0.0}));
  CHECK_NOTHROW(validate(PhysicalParams{2.5}));
  CHECK_THROWS_AS(validate(PhysicalParams{-1.0}), ConfigError);
}
