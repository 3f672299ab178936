#include "netspace/su2.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netspace/summation.hpp"

namespace netspace {

double su2_character(int two_l, double theta) {
  if (two_l < 0) throw std::domain_error("character index 2l must be >= 0");
  const int u = two_l + 1;  // 2l+1
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-7) {
    // l'Hopital at the Weyl-chamber walls: sin(u t)/sin(t) -> u cos(u t)/cos(t)
    return u * std::cos(u * theta) / std::cos(theta);
  }
  return std::sin(u * theta) / s;
}

SU2ClassFunction::SU2ClassFunction(int two_l_max, int quad_nodes)
    : quad_nodes_(quad_nodes) {
  if (two_l_max < 0) {
    throw std::invalid_argument("two_l_max must be >= 0");
  }
  coeffs_.assign(static_cast<std::size_t>(two_l_max) + 1, {0.0, 0.0});
}

std::complex<double>& SU2ClassFunction::coeff(int two_l) {
  if (two_l < 0 || two_l > two_l_max()) {
    throw std::domain_error("coefficient index 2l out of range: " +
                            std::to_string(two_l));
  }
  return coeffs_[static_cast<std::size_t>(two_l)];
}

std::complex<double> SU2ClassFunction::coeff(int two_l) const {
  if (two_l < 0) {
    throw std::domain_error("coefficient index 2l out of range");
  }
  if (two_l > two_l_max()) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(two_l)];
}

std::complex<double> SU2ClassFunction::evaluate(double theta) const {
  CompensatedComplexSum acc;
  for (int t = 0; t <= two_l_max(); ++t) {
    const auto c = coeffs_[static_cast<std::size_t>(t)];
    if (c != std::complex<double>{0.0, 0.0}) {
      acc += c * su2_character(t, theta);
    }
  }
  return acc.value();
}

int su2_required_nodes(int two_l_max) { return 4 * (two_l_max + 1); }

QuadratureRule su2_quadrature(int min_nodes) {
  const int panels = std::max(2, (std::max(min_nodes, 1) + 63) / 64);
  return gauss_legendre_panels(0.0, M_PI, panels);
}

double su2_haar_integral(const std::vector<double>& values,
                         const QuadratureRule& rule) {
  if (values.size() != rule.size()) {
    throw std::invalid_argument("value/node count mismatch");
  }
  CompensatedSum acc;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double s = std::sin(rule.nodes[j]);
    acc += rule.weights[j] * values[j] * s * s;
  }
  return (2.0 / M_PI) * acc.value();
}

CoefficientNet su2_class_fourier(const SU2ClassFunction& f,
                                 const Lattice& su2_dual) {
  if (su2_dual.kind() != LatticeKind::Su2Dual) {
    throw std::invalid_argument("su2_class_fourier expects an SU(2) dual");
  }
  int top = f.two_l_max();
  for (const LatticeElement& e : su2_dual.elements()) {
    top = std::max(top, su2_dual.two_l(e.id));
  }
  const int required = su2_required_nodes(top);
  int nodes = f.quad_nodes();
  if (nodes == 0) {
    nodes = std::max(256, 3 * required);
  } else if (nodes < required) {
    throw std::invalid_argument(
        "insufficient quadrature nodes: " + std::to_string(nodes) +
        " given, need >= " + std::to_string(required));
  }
  const QuadratureRule rule = su2_quadrature(nodes);

  std::vector<std::complex<double>> fvals(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    fvals[j] = f.evaluate(rule.nodes[j]);
  }

  CoefficientNet out(su2_dual);
  for (const LatticeElement& e : su2_dual.elements()) {
    const int t = su2_dual.two_l(e.id);
    CompensatedComplexSum acc;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double s = std::sin(rule.nodes[j]);
      acc += rule.weights[j] * fvals[j] * su2_character(t, rule.nodes[j]) * s *
             s;
    }
    const std::complex<double> c = (2.0 / M_PI) * acc.value();
    const int u = t + 1;
    out.matrix(e.id) =
        (c / static_cast<double>(u)) *
        Eigen::MatrixXcd::Identity(u, u);
  }
  return out;
}

namespace {

double lp_at_nodes(const SU2ClassFunction& f, double p,
                   const QuadratureRule& rule) {
  std::vector<double> values(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    values[j] = std::pow(std::abs(f.evaluate(rule.nodes[j])), p);
  }
  return std::pow(su2_haar_integral(values, rule), 1.0 / p);
}

int auto_lp_nodes(const SU2ClassFunction& f) {
  return std::max(512, 12 * (f.two_l_max() + 1));
}

}  // namespace

double su2_lp_norm(const SU2ClassFunction& f, double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error("su2_lp_norm requires 1 <= p < inf");
  }
  const int nodes =
      f.quad_nodes() > 0 ? f.quad_nodes() : auto_lp_nodes(f);
  return lp_at_nodes(f, p, su2_quadrature(nodes));
}

QuadratureEstimate su2_lp_norm_with_error(const SU2ClassFunction& f,
                                          double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error("su2_lp_norm requires 1 <= p < inf");
  }
  const int nodes =
      f.quad_nodes() > 0 ? f.quad_nodes() : auto_lp_nodes(f);
  const double coarse = lp_at_nodes(f, p, su2_quadrature(nodes));
  const double fine = lp_at_nodes(f, p, su2_quadrature(2 * nodes));
  return {fine, std::abs(fine - coarse)};
}

SU2ClassFunction su2_from_json(const nlohmann::json& j) {
  int top = 0;
  for (auto it = j.begin(); it != j.end(); ++it) {
    top = std::max(top, std::stoi(it.key()));
  }
  SU2ClassFunction f(top);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int t = std::stoi(it.key());
    if (t < 0) throw std::domain_error("negative 2l key in class function");
    f.coeff(t) = {it.value().at(0).get<double>(),
                  it.value().at(1).get<double>()};
  }
  return f;
}

}  // namespace netspace
