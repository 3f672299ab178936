#include "netspace/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace netspace {

namespace {

constexpr int kPanelOrder = 64;

struct BaseRule {
  std::array<double, kPanelOrder> nodes;    // on [-1, 1]
  std::array<double, kPanelOrder> weights;
};

/// Newton iteration on Legendre P_64 roots; symmetric halves mirrored.
BaseRule compute_base_rule() {
  BaseRule rule{};
  const int n = kPanelOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

const BaseRule& base_rule() {
  static const BaseRule rule = compute_base_rule();
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre_panels(double a, double b, int panels) {
  if (panels < 1) throw std::invalid_argument("panel count must be positive");
  if (!(b > a)) throw std::invalid_argument("empty integration range");

  const BaseRule& base = base_rule();
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
  rule.weights.reserve(static_cast<std::size_t>(panels) * kPanelOrder);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int j = 0; j < kPanelOrder; ++j) {
      rule.nodes.push_back(mid + 0.5 * h * base.nodes[static_cast<std::size_t>(j)]);
      rule.weights.push_back(0.5 * h * base.weights[static_cast<std::size_t>(j)]);
    }
  }
  return rule;
}

}  // namespace netspace
