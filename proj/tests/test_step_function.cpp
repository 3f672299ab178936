#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "netspace/step_function.hpp"

using namespace netspace;

TEST_CASE("canonicalization sorts, merges, and keeps mass") {
  StepFunction f = StepFunction::from_atoms(
      {{1.0, 0.25}, {3.0, 0.5}, {1.0, 0.75}, {0.0, 0.5}});
  REQUIRE(f.steps().size() == 3);
  CHECK(f.steps()[0].value == 3.0);
  CHECK(f.steps()[1].value == 1.0);
  CHECK(f.steps()[1].mass == 1.0);
  CHECK(f.steps()[2].value == 0.0);
  CHECK(f.total_mass() == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t i = 1; i < f.steps().size(); ++i) {
    CHECK(f.steps()[i].value < f.steps()[i - 1].value);
  }

  CHECK_THROWS_AS(StepFunction::from_atoms({{-1.0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(StepFunction::from_atoms({{1.0, 0.0}}), std::domain_error);
}

TEST_CASE("value_at walks the steps") {
  const StepFunction f = StepFunction::from_atoms({{2.0, 0.5}, {1.0, 0.5}});
  CHECK(f.value_at(0.25) == 2.0);
  CHECK(f.value_at(0.5) == 2.0);
  CHECK(f.value_at(0.75) == 1.0);
  CHECK(f.value_at(2.0) == 0.0);
  CHECK_THROWS_AS(f.value_at(0.0), std::domain_error);
}

TEST_CASE("single-step lorentz closed form") {
  const double v = 2.5;
  const StepFunction f = StepFunction::from_atoms({{v, 1.0}});
  for (double p : {1.5, 2.0, 4.0}) {
    for (double q : {1.0, 2.0, 3.5}) {
      CHECK(f.lorentz_norm(p, q) ==
            doctest::Approx(v * std::pow(p / q, 1.0 / q)).epsilon(1e-14));
    }
    CHECK(f.lorentz_norm(p, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(v).epsilon(1e-14));
  }
}

TEST_CASE("L^{p,p} equals L^p and equimeasurability holds") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(0.0, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<StepFunction::Step> atoms;
    double direct_mass = 0.0;
    std::vector<double> values;
    for (int i = 0; i < 40; ++i) {
      const double v = uni(rng);
      atoms.push_back({v, 0.025});
      values.push_back(v);
      direct_mass += 0.025;
    }
    const StepFunction f = StepFunction::from_atoms(atoms);
    CHECK(f.total_mass() == doctest::Approx(direct_mass).epsilon(1e-12));
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      double direct = 0.0;
      for (double v : values) direct += std::pow(v, p) * 0.025;
      direct = std::pow(direct, 1.0 / p);
      CHECK(f.lp_norm(p) == doctest::Approx(direct).epsilon(1e-12));
      if (p > 1.0) {
        CHECK(f.lorentz_norm(p, p) == doctest::Approx(direct).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("q = inf picks the right step edge") {
  // f* = 2 on (0, 1/4], 1 on (1/4, 1]: sup t^{1/2} f* = max(2/2, 1) = 1
  const StepFunction f = StepFunction::from_atoms({{2.0, 0.25}, {1.0, 0.75}});
  CHECK(f.lorentz_norm(2.0, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(1.0).epsilon(1e-14));
}
