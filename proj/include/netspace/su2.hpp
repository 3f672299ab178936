#pragma once

#include <complex>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netspace/coefficient_net.hpp"
#include "netspace/quadrature.hpp"

namespace netspace {

/// chi_l(theta) = sin((2l+1) theta) / sin(theta), with the removable
/// singularities at theta = 0, pi evaluated analytically.
double su2_character(int two_l, double theta);

/// Class function f(theta) = sum over l of c_l chi_l(theta) in character
/// coordinates; conjugacy-class quadrature node count rides along.
class SU2ClassFunction {
 public:
  explicit SU2ClassFunction(int two_l_max, int quad_nodes = 0);

  int two_l_max() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::complex<double>& coeff(int two_l);
  std::complex<double> coeff(int two_l) const;
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  std::complex<double> evaluate(double theta) const;

  /// Requested node count; 0 means pick automatically.
  int quad_nodes() const { return quad_nodes_; }
  void set_quad_nodes(int nodes) { quad_nodes_ = nodes; }

 private:
  std::vector<std::complex<double>> coeffs_;
  int quad_nodes_ = 0;
};

/// Node count the analysis of characters up to the given 2l requires.
int su2_required_nodes(int two_l_max);

/// Composite Gauss rule on [0, pi] with at least min_nodes nodes.
QuadratureRule su2_quadrature(int min_nodes);

/// Haar integral of a class function g on SU(2):
/// (2/pi) * integral over [0, pi] of g(theta) sin^2(theta) dtheta.
double su2_haar_integral(const std::vector<double>& values,
                         const QuadratureRule& rule);

/// fhat(l) = (c_l / (2l+1)) I_{2l+1} with c_l recovered by character
/// quadrature; Tr fhat(l) = c_l. Refuses under-resolved quadrature.
CoefficientNet su2_class_fourier(const SU2ClassFunction& f,
                                 const Lattice& su2_dual);

/// ((2/pi) integral |f|^p sin^2)^(1/p), 1 <= p < inf.
double su2_lp_norm(const SU2ClassFunction& f, double p);

struct QuadratureEstimate {
  double value = 0.0;
  double error_estimate = 0.0;  ///< |value - coarser-refinement value|
};

QuadratureEstimate su2_lp_norm_with_error(const SU2ClassFunction& f, double p);

/// Coefficient list {"2l": [re, im]} with integer keys 2l.
SU2ClassFunction su2_from_json(const nlohmann::json& j);

}  // namespace netspace
