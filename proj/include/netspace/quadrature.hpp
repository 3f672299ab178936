#pragma once

#include <vector>

namespace netspace {

/// Nodes and weights for plain integration of f over [a, b]:
/// integral ~= sum w_j f(x_j).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Composite Gauss-Legendre rule: `panels` equal panels of 64 points each.
QuadratureRule gauss_legendre_panels(double a, double b, int panels);

}  // namespace netspace
