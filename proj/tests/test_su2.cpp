#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "netspace/netnorm.hpp"
#include "netspace/su2.hpp"
#include "oracles.hpp"

using namespace netspace;

TEST_CASE("characters at the chamber walls") {
  for (int t : {0, 1, 2, 7}) {
    CHECK(su2_character(t, 0.0) == doctest::Approx(t + 1).epsilon(1e-13));
    const double at_pi = su2_character(t, M_PI);
    const double expected = (t % 2 == 0) ? (t + 1) : -(t + 1);
    CHECK(at_pi == doctest::Approx(expected).epsilon(1e-10));
    CHECK(su2_character(t, 1e-9) == doctest::Approx(t + 1).epsilon(1e-9));
  }
}

TEST_CASE("character orthonormality under the class weight") {
  const QuadratureRule rule = su2_quadrature(512);
  for (int t = 0; t <= 10; ++t) {
    for (int s = t; s <= 10; ++s) {
      std::vector<double> vals(rule.size());
      for (std::size_t j = 0; j < rule.size(); ++j) {
        vals[j] = su2_character(t, rule.nodes[j]) *
                  su2_character(s, rule.nodes[j]);
      }
      const double integral = su2_haar_integral(vals, rule);
      CHECK(std::abs(integral - (t == s ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("class fourier transform recovers character coefficients") {
  const Lattice dual = make_su2_dual(3.0);

  for (int t0 : {0, 3, 6}) {
    SU2ClassFunction chi(6);
    chi.coeff(t0) = 1.0;
    const CoefficientNet fhat = su2_class_fourier(chi, dual);
    for (const LatticeElement& e : dual.elements()) {
      const int t = dual.two_l(e.id);
      CHECK(std::abs(fhat.trace(e.id) -
                     (t == t0 ? std::complex<double>{1.0} : 0.0)) <= 1e-12);
      // fhat(l) = c/(2l+1) * I: Hilbert-Schmidt norm |c|/sqrt(2l+1)
      CHECK(fhat.matrix(e.id).rows() == t + 1);
      CHECK(fhat.matrix(e.id).cols() == t + 1);
    }
  }

  SU2ClassFunction constant(0);
  constant.coeff(0) = 1.0;
  const CoefficientNet one_hat = su2_class_fourier(constant, dual);
  CHECK(std::abs(one_hat.trace(0) - 1.0) <= 1e-13);
  for (ElementId id = 1; id < static_cast<ElementId>(dual.size()); ++id) {
    CHECK(std::abs(one_hat.trace(id)) <= 1e-13);
  }
}

TEST_CASE("insufficient quadrature nodes are refused") {
  const Lattice dual = make_su2_dual(10.0);
  SU2ClassFunction f(20, 32);  // needs 4 * 21 = 84
  f.coeff(20) = 1.0;
  try {
    su2_class_fourier(f, dual);
    FAIL("expected a node-count refusal");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("84") != std::string::npos);
  }
}

TEST_CASE("lp norms of class functions") {
  for (int t = 0; t <= 10; ++t) {
    SU2ClassFunction chi(t);
    chi.coeff(t) = 1.0;
    CHECK(std::abs(su2_lp_norm(chi, 2.0) - 1.0) <= 1e-10);
  }

  SU2ClassFunction c(0);
  c.coeff(0) = {3.0, -4.0};
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    CHECK(su2_lp_norm(c, p) == doctest::Approx(5.0).epsilon(1e-12));
  }

  const QuadratureEstimate est = su2_lp_norm_with_error(c, 2.0);
  CHECK(est.error_estimate <= 1e-12);
}

TEST_CASE("plancherel on SU(2)") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Lattice dual = make_su2_dual(5.0);
  for (int trial = 0; trial < 10; ++trial) {
    SU2ClassFunction f(10);
    double sum_sq = 0.0;
    for (int t = 0; t <= 10; ++t) {
      f.coeff(t) = {gauss(rng), gauss(rng)};
      sum_sq += std::norm(f.coeff(t));
    }
    const double lhs = su2_lp_norm(f, 2.0);
    CHECK(std::abs(lhs - std::sqrt(sum_sq)) <= 1e-10 * lhs);

    const CoefficientNet fhat = su2_class_fourier(f, dual);
    const double rhs = ellp_norm(fhat, 2.0);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * lhs);
  }
}

TEST_CASE("hausdorff-young on SU(2)") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Lattice dual = make_su2_dual(4.0);
  for (int trial = 0; trial < 5; ++trial) {
    SU2ClassFunction f(8);
    for (int t = 0; t <= 8; ++t) f.coeff(t) = {gauss(rng), gauss(rng)};
    const CoefficientNet fhat = su2_class_fourier(f, dual);
    for (double p : {1.25, 1.5, 2.0}) {
      const double p_prime = p / (p - 1.0);
      CHECK(ellp_norm(fhat, p_prime) <=
            su2_lp_norm(f, p) * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("gauss rule against simpson on a rough integrand") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SU2ClassFunction f(6);
  for (int t = 0; t <= 6; ++t) f.coeff(t) = {gauss(rng), gauss(rng)};
  const double p = 1.5;
  const double by_gauss = std::pow(su2_lp_norm(f, p), p);
  const double by_simpson = oracle::simpson_haar(
      [&](double theta) { return std::pow(std::abs(f.evaluate(theta)), p); },
      200000);
  CHECK(std::abs(by_gauss - by_simpson) <= 1e-9 * std::max(1.0, by_gauss));
}

TEST_CASE("json class-function loader") {
  const nlohmann::json j = {{"0", {1.0, 0.0}}, {"3", {0.0, -2.0}}};
  const SU2ClassFunction f = su2_from_json(j);
  CHECK(f.two_l_max() == 3);
  CHECK(f.coeff(0) == std::complex<double>{1.0, 0.0});
  CHECK(f.coeff(3) == std::complex<double>{0.0, -2.0});
  CHECK(f.coeff(1) == std::complex<double>{0.0, 0.0});
}
