#pragma once

#include <complex>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netspace/coefficient_net.hpp"
#include "netspace/step_function.hpp"

namespace netspace {

/// Complex samples on the uniform grid (j/M)^n of the n-torus.
class TorusFunction {
 public:
  TorusFunction(int n, int grid_m);

  int dimension() const { return n_; }
  int grid_size() const { return m_; }
  std::size_t sample_count() const { return samples_.size(); }

  std::complex<double>& sample(std::size_t flat) { return samples_[flat]; }
  const std::complex<double>& sample(std::size_t flat) const {
    return samples_[flat];
  }
  const std::vector<std::complex<double>>& samples() const { return samples_; }

 private:
  int n_;
  int m_;
  std::vector<std::complex<double>> samples_;
};

/// f(j/M) = sum over modes m of coeff(m) e^{2 pi i m.j/M}. The coefficient
/// net lives on an integer lattice; requires M >= 2*bandwidth + 1.
TorusFunction torus_synthesize(const CoefficientNet& coeffs, int grid_m);

/// fhat(m) = M^-n sum_j f(j/M) e^{-2 pi i m.j/M} for every lattice mode m;
/// exact for trigonometric polynomials of bandwidth <= (M-1)/2. Refuses
/// lattices whose bandwidth would alias on the given grid.
CoefficientNet torus_fourier(const TorusFunction& f, const Lattice& zn);

/// Equal-weight grid quadrature of |f|^p, 1 <= p < inf.
double torus_lp_norm(const TorusFunction& f, double p);

double torus_sup_norm(const TorusFunction& f);

/// Decreasing rearrangement of |f| as atoms of mass M^-n.
StepFunction torus_rearrangement(const TorusFunction& f);

double torus_lorentz_norm(const TorusFunction& f, double p, double q);

/// Coefficient list {"m": [re, im]} (keys "3" or "2,-1") onto a lattice.
CoefficientNet torus_coefficients_from_json(const Lattice& zn,
                                            const nlohmann::json& j);

}  // namespace netspace
