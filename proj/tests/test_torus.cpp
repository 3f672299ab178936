#include <doctest.h>

#include <random>

#include "netspace/netnorm.hpp"
#include "netspace/torus.hpp"
#include "oracles.hpp"

using namespace netspace;

namespace {

CoefficientNet random_coeffs(const Lattice& zn, std::mt19937_64& rng) {
  return oracle::random_matrix_net(zn, rng);
}

}  // namespace

TEST_CASE("analysis of pure modes") {
  const Lattice zn = make_integer_lattice(1, 3);
  TorusFunction f(1, 8);
  for (int j = 0; j < 8; ++j) {
    const double x = static_cast<double>(j) / 8.0;
    f.sample(static_cast<std::size_t>(j)) =
        std::complex<double>{std::cos(2 * M_PI * x), std::sin(2 * M_PI * x)};
  }
  const CoefficientNet fhat = torus_fourier(f, zn);
  for (const LatticeElement& e : zn.elements()) {
    const int m = zn.coordinates()[static_cast<std::size_t>(e.id)][0];
    const double expected = m == 1 ? 1.0 : 0.0;
    CHECK(std::abs(fhat.matrix(e.id)(0, 0) - expected) <= 1e-14);
  }

  TorusFunction ones(1, 8);
  for (std::size_t j = 0; j < 8; ++j) ones.sample(j) = 1.0;
  const CoefficientNet ones_hat = torus_fourier(ones, zn);
  CHECK(std::abs(ones_hat.matrix(zn.find_label("m=0"))(0, 0) - 1.0) <= 1e-15);
}

TEST_CASE("synthesis/analysis round trip") {
  std::mt19937_64 rng(12);
  const Lattice zn = make_integer_lattice(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const CoefficientNet coeffs = random_coeffs(zn, rng);
    const TorusFunction f = torus_synthesize(coeffs, 64);
    const CoefficientNet back = torus_fourier(f, zn);
    for (const LatticeElement& e : zn.elements()) {
      CHECK(std::abs(back.matrix(e.id)(0, 0) - coeffs.matrix(e.id)(0, 0)) <=
            1e-12);
    }
  }
}

TEST_CASE("two-dimensional round trip") {
  std::mt19937_64 rng(21);
  const Lattice zn = make_integer_lattice(2, 2);
  const CoefficientNet coeffs = random_coeffs(zn, rng);
  const TorusFunction f = torus_synthesize(coeffs, 8);
  const CoefficientNet back = torus_fourier(f, zn);
  for (const LatticeElement& e : zn.elements()) {
    CHECK(std::abs(back.matrix(e.id)(0, 0) - coeffs.matrix(e.id)(0, 0)) <=
          1e-12);
  }
}

TEST_CASE("aliasing is refused") {
  const Lattice wide = make_integer_lattice(1, 40);
  TorusFunction f(1, 16);
  CHECK_THROWS_AS(torus_fourier(f, wide), std::invalid_argument);
  std::mt19937_64 rng(4);
  const CoefficientNet coeffs = random_coeffs(wide, rng);
  CHECK_THROWS_AS(torus_synthesize(coeffs, 16), std::invalid_argument);
}

TEST_CASE("grid norms") {
  TorusFunction c(1, 32);
  for (std::size_t j = 0; j < 32; ++j) c.sample(j) = {-1.5, 2.0};
  const double mag = std::abs(std::complex<double>{-1.5, 2.0});
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    CHECK(torus_lp_norm(c, p) == doctest::Approx(mag).epsilon(1e-13));
  }
  for (double q : {1.0, 2.0}) {
    CHECK(torus_lorentz_norm(c, 2.0, q) ==
          doctest::Approx(mag * std::pow(2.0 / q, 1.0 / q)).epsilon(1e-13));
  }

  const Lattice zn = make_integer_lattice(1, 2);
  CoefficientNet mode(zn);
  mode.matrix(zn.find_label("m=1"))(0, 0) = 1.0;
  CHECK(torus_lp_norm(torus_synthesize(mode, 16), 2.0) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("lorentz norm at q = p matches the lebesgue norm") {
  std::mt19937_64 rng(88);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    TorusFunction f(1, 64);
    for (std::size_t j = 0; j < 64; ++j) f.sample(j) = {gauss(rng), gauss(rng)};
    for (double p : {1.5, 2.0, 3.0}) {
      CHECK(torus_lorentz_norm(f, p, p) ==
            doctest::Approx(torus_lp_norm(f, p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("rearrangement preserves mass and norms") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> gauss(0.0, 1.0);
  TorusFunction f(1, 128);
  for (std::size_t j = 0; j < 128; ++j) f.sample(j) = {gauss(rng), gauss(rng)};
  const StepFunction star = torus_rearrangement(f);
  CHECK(star.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  for (double p : {1.0, 2.0, 3.5}) {
    CHECK(star.lp_norm(p) == doctest::Approx(torus_lp_norm(f, p)).epsilon(1e-12));
  }
}

TEST_CASE("plancherel on the torus") {
  std::mt19937_64 rng(34);
  const Lattice zn = make_integer_lattice(1, 12);
  for (int trial = 0; trial < 20; ++trial) {
    const CoefficientNet coeffs = random_coeffs(zn, rng);
    const TorusFunction f = torus_synthesize(coeffs, 64);
    const double lhs = torus_lp_norm(f, 2.0);
    const double rhs = ellp_norm(torus_fourier(f, zn), 2.0);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * lhs);
  }
}

TEST_CASE("hausdorff-young on the torus") {
  std::mt19937_64 rng(56);
  const Lattice zn = make_integer_lattice(1, 10);
  for (int trial = 0; trial < 10; ++trial) {
    const CoefficientNet coeffs = random_coeffs(zn, rng);
    const TorusFunction f = torus_synthesize(coeffs, 256);
    for (double p : {1.25, 1.5, 2.0}) {
      const double p_prime = p / (p - 1.0);
      const double lhs = ellp_norm(torus_fourier(f, zn), p_prime);
      const double rhs = torus_lp_norm(f, p);
      CHECK(lhs <= rhs * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("lorentz duality quotients") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int m = 64;
  for (int trial = 0; trial < 10; ++trial) {
    TorusFunction f(1, m);
    for (std::size_t j = 0; j < m; ++j) f.sample(j) = {gauss(rng), gauss(rng)};
    for (double p : {1.5, 2.0, 3.0}) {
      const double p_prime = p / (p - 1.0);
      for (double q : {1.0, 1.5, 2.0, 4.0}) {
        const double q_prime = q == 1.0 ? std::numeric_limits<double>::infinity()
                                        : q / (q - 1.0);
        const double fnorm = torus_lorentz_norm(f, p, q);
        // Hoelder direction with constant 1 for random g
        for (int draw = 0; draw < 10; ++draw) {
          TorusFunction g(1, m);
          for (std::size_t j = 0; j < m; ++j) {
            g.sample(j) = {gauss(rng), gauss(rng)};
          }
          double pairing = 0.0;
          for (std::size_t j = 0; j < m; ++j) {
            pairing += std::abs(f.sample(j)) * std::abs(g.sample(j));
          }
          pairing /= m;
          const double gnorm = torus_lorentz_norm(g, p_prime, q_prime);
          CHECK(pairing <= fnorm * gnorm * (1.0 + 1e-10));
        }
      }
      // exact extremizer at q = p: g = |f|^{p-1} shares all level sets
      TorusFunction g(1, m);
      for (std::size_t j = 0; j < m; ++j) {
        g.sample(j) = std::pow(std::abs(f.sample(j)), p - 1.0);
      }
      double pairing = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        pairing += std::abs(f.sample(j)) * std::abs(g.sample(j));
      }
      pairing /= m;
      const double quotient =
          pairing / torus_lorentz_norm(g, p_prime, p_prime);
      CHECK(quotient == doctest::Approx(torus_lorentz_norm(f, p, p)).epsilon(1e-10));
    }
  }
}
