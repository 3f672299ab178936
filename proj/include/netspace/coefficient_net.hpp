#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "netspace/lattice.hpp"

namespace netspace {

/// Matrix net F = {F(pi)}: one complex kappa_pi x delta_pi matrix per
/// lattice element. Immutable in spirit once populated; the engines only
/// read it.
class CoefficientNet {
 public:
  explicit CoefficientNet(const Lattice& lat);
  CoefficientNet(const Lattice& lat, std::vector<Eigen::MatrixXcd> matrices);

  const Lattice& lattice() const { return *lattice_; }

  const Eigen::MatrixXcd& matrix(ElementId id) const;
  Eigen::MatrixXcd& matrix(ElementId id);

  /// Tr F(theta) = sum of the first min(kappa, delta) diagonal entries.
  std::complex<double> trace(ElementId id) const {
    return matrix(id).diagonal().sum();
  }

  /// delta_theta * Tr F(theta), the term the averaging sums.
  std::complex<double> weighted_trace(ElementId id) const {
    return static_cast<double>(lattice_->element(id).delta) * trace(id);
  }

  double hs_norm(ElementId id) const { return matrix(id).norm(); }

  bool is_zero() const;
  /// True when every entry has negligible imaginary part (relative to the
  /// largest entry magnitude).
  bool is_real(double tol = 1e-14) const;

  nlohmann::json to_json() const;
  static CoefficientNet from_json(const Lattice& lat, const nlohmann::json& j);

 private:
  const Lattice* lattice_;
  std::vector<Eigen::MatrixXcd> matrices_;
};

CoefficientNet operator+(const CoefficientNet& a, const CoefficientNet& b);
CoefficientNet operator-(const CoefficientNet& a, const CoefficientNet& b);
CoefficientNet operator*(std::complex<double> c, const CoefficientNet& f);

}  // namespace netspace
