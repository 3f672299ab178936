#include "netspace/torus.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netspace/summation.hpp"

namespace netspace {

namespace {

std::size_t pow_size(int m, int n) {
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(m);
  return s;
}

int lattice_bandwidth(const Lattice& zn) {
  if (zn.kind() != LatticeKind::IntegerLattice) {
    throw std::invalid_argument("torus transforms require an integer lattice");
  }
  int k = 0;
  for (const auto& m : zn.coordinates()) {
    for (int c : m) k = std::max(k, std::abs(c));
  }
  return k;
}

/// mod-M phase index of m.j for the flat grid index j.
int mode_dot_grid(const std::vector<int>& mode, std::size_t flat, int m) {
  long long acc = 0;
  for (std::size_t d = mode.size(); d-- > 0;) {
    const int jd = static_cast<int>(flat % static_cast<std::size_t>(m));
    flat /= static_cast<std::size_t>(m);
    acc += static_cast<long long>(mode[d]) * jd;
  }
  const long long r = acc % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<std::complex<double>> twiddle_table(int m) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double phase = 2.0 * M_PI * k / m;
    w[static_cast<std::size_t>(k)] = {std::cos(phase), std::sin(phase)};
  }
  return w;
}

}  // namespace

TorusFunction::TorusFunction(int n, int grid_m) : n_(n), m_(grid_m) {
  if (n < 1) throw std::invalid_argument("torus dimension must be >= 1");
  if (grid_m < 2) throw std::invalid_argument("grid size must be >= 2");
  samples_.assign(pow_size(grid_m, n), {0.0, 0.0});
}

TorusFunction torus_synthesize(const CoefficientNet& coeffs, int grid_m) {
  const Lattice& zn = coeffs.lattice();
  const int k = lattice_bandwidth(zn);
  if (grid_m < 2 * k + 1) {
    throw std::invalid_argument(
        "grid size " + std::to_string(grid_m) + " aliases bandwidth " +
        std::to_string(k) + "; need M >= " + std::to_string(2 * k + 1));
  }
  TorusFunction f(zn.dimension(), grid_m);
  const auto w = twiddle_table(grid_m);
  for (const LatticeElement& e : zn.elements()) {
    const std::complex<double> c = coeffs.matrix(e.id)(0, 0);
    if (c == std::complex<double>{0.0, 0.0}) continue;
    const auto& mode = zn.coordinates()[static_cast<std::size_t>(e.id)];
    for (std::size_t j = 0; j < f.sample_count(); ++j) {
      f.sample(j) += c * w[static_cast<std::size_t>(
                         mode_dot_grid(mode, j, grid_m))];
    }
  }
  return f;
}

CoefficientNet torus_fourier(const TorusFunction& f, const Lattice& zn) {
  const int k = lattice_bandwidth(zn);
  if (f.grid_size() < 2 * k + 1) {
    throw std::invalid_argument(
        "grid size " + std::to_string(f.grid_size()) +
        " aliases bandwidth " + std::to_string(k) + "; need M >= " +
        std::to_string(2 * k + 1));
  }
  if (zn.dimension() != f.dimension()) {
    throw std::invalid_argument("lattice/grid dimension mismatch");
  }
  CoefficientNet out(zn);
  const auto w = twiddle_table(f.grid_size());
  const double scale = 1.0 / static_cast<double>(f.sample_count());
  for (const LatticeElement& e : zn.elements()) {
    const auto& mode = zn.coordinates()[static_cast<std::size_t>(e.id)];
    CompensatedComplexSum acc;
    for (std::size_t j = 0; j < f.sample_count(); ++j) {
      acc += f.sample(j) *
             std::conj(w[static_cast<std::size_t>(
                 mode_dot_grid(mode, j, f.grid_size()))]);
    }
    out.matrix(e.id)(0, 0) = scale * acc.value();
  }
  return out;
}

double torus_lp_norm(const TorusFunction& f, double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error("torus_lp_norm requires 1 <= p < inf");
  }
  CompensatedSum acc;
  for (const auto& s : f.samples()) acc += std::pow(std::abs(s), p);
  return std::pow(acc.value() / static_cast<double>(f.sample_count()),
                  1.0 / p);
}

double torus_sup_norm(const TorusFunction& f) {
  double best = 0.0;
  for (const auto& s : f.samples()) best = std::max(best, std::abs(s));
  return best;
}

StepFunction torus_rearrangement(const TorusFunction& f) {
  std::vector<StepFunction::Step> atoms;
  atoms.reserve(f.sample_count());
  const double mass = 1.0 / static_cast<double>(f.sample_count());
  for (const auto& s : f.samples()) atoms.push_back({std::abs(s), mass});
  return StepFunction::from_atoms(std::move(atoms));
}

double torus_lorentz_norm(const TorusFunction& f, double p, double q) {
  return torus_rearrangement(f).lorentz_norm(p, q);
}

CoefficientNet torus_coefficients_from_json(const Lattice& zn,
                                            const nlohmann::json& j) {
  CoefficientNet net(zn);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::vector<int> mode;
    std::stringstream ss(it.key());
    std::string part;
    while (std::getline(ss, part, ',')) mode.push_back(std::stoi(part));
    if (static_cast<int>(mode.size()) != zn.dimension()) {
      throw std::invalid_argument("mode key " + it.key() +
                                  " has wrong dimension");
    }
    ElementId found = -1;
    const auto& coords = zn.coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == mode) {
        found = static_cast<ElementId>(i);
        break;
      }
    }
    if (found < 0) {
      throw std::domain_error("mode " + it.key() +
                              " is outside the lattice truncation");
    }
    net.matrix(found)(0, 0) = {it.value().at(0).get<double>(),
                               it.value().at(1).get<double>()};
  }
  return net;
}

}  // namespace netspace
