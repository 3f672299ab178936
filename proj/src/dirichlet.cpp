#include "netspace/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "netspace/quadrature.hpp"
#include "netspace/step_function.hpp"
#include "netspace/su2.hpp"
#include "netspace/summation.hpp"

namespace netspace {

namespace {

double conjugate_exponent(double p) {
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

/// Per-element realization of d_pi Tr pi at a fixed set of evaluation
/// points, plus the measure weights that turn point values into an L^{p'}
/// norm. The torus uses the uniform grid; SU(2) uses Weyl quadrature with
/// the (2/pi) sin^2 class weight folded into `weights`.
struct KernelTable {
  std::vector<std::vector<std::complex<double>>> element_values;
  std::vector<double> weights;

  double norm(const std::vector<std::complex<double>>& dvals,
              double p_prime) const {
    CompensatedSum acc;
    for (std::size_t j = 0; j < dvals.size(); ++j) {
      acc += weights[j] * std::pow(std::abs(dvals[j]), p_prime);
    }
    return std::pow(acc.value(), 1.0 / p_prime);
  }

  double sup(const std::vector<std::complex<double>>& dvals) const {
    double best = 0.0;
    for (const auto& v : dvals) best = std::max(best, std::abs(v));
    return best;
  }
};

KernelTable torus_table(const Lattice& lat, int grid_m) {
  if (lat.kind() != LatticeKind::IntegerLattice) {
    throw std::invalid_argument("torus frontend requires an integer lattice");
  }
  if (lat.dimension() != 1) {
    throw std::invalid_argument(
        "Dirichlet realization on the torus is implemented for n = 1");
  }
  KernelTable table;
  table.weights.assign(static_cast<std::size_t>(grid_m),
                       1.0 / static_cast<double>(grid_m));
  table.element_values.resize(lat.size());
  for (const LatticeElement& e : lat.elements()) {
    const int m = lat.coordinates()[static_cast<std::size_t>(e.id)][0];
    auto& vals = table.element_values[static_cast<std::size_t>(e.id)];
    vals.resize(static_cast<std::size_t>(grid_m));
    for (int j = 0; j < grid_m; ++j) {
      const double phase = 2.0 * M_PI * m * j / grid_m;
      vals[static_cast<std::size_t>(j)] = {std::cos(phase), std::sin(phase)};
    }
  }
  return table;
}

KernelTable su2_table(const Lattice& lat, int quad_nodes) {
  if (lat.kind() != LatticeKind::Su2Dual) {
    throw std::invalid_argument("su2 frontend requires an SU(2) dual lattice");
  }
  int top = 0;
  for (const LatticeElement& e : lat.elements()) {
    top = std::max(top, lat.two_l(e.id));
  }
  const int nodes =
      quad_nodes > 0 ? quad_nodes : std::max(512, 8 * (top + 1));
  const QuadratureRule rule = su2_quadrature(nodes);

  KernelTable table;
  table.weights.resize(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const double s = std::sin(rule.nodes[j]);
    table.weights[j] = (2.0 / M_PI) * rule.weights[j] * s * s;
  }
  table.element_values.resize(lat.size());
  for (const LatticeElement& e : lat.elements()) {
    const int t = lat.two_l(e.id);
    auto& vals = table.element_values[static_cast<std::size_t>(e.id)];
    vals.resize(rule.size());
    for (std::size_t j = 0; j < rule.size(); ++j) {
      vals[j] = static_cast<double>(t + 1) * su2_character(t, rule.nodes[j]);
    }
  }
  return table;
}

KernelTable make_table(const Lattice& lat, Frontend frontend,
                       const DirichletOptions& opts, int resolution_factor) {
  if (frontend == Frontend::Torus) {
    return torus_table(lat, opts.grid_m * resolution_factor);
  }
  int nodes = opts.quad_nodes;
  if (nodes > 0) nodes *= resolution_factor;
  KernelTable table = su2_table(lat, nodes);
  if (opts.quad_nodes == 0 && resolution_factor > 1) {
    table = su2_table(lat, static_cast<int>(table.weights.size()) *
                               resolution_factor);
  }
  return table;
}

std::vector<std::complex<double>> assemble(const KernelTable& table,
                                           std::span<const ElementId> q) {
  std::vector<std::complex<double>> dvals(table.weights.size(), {0.0, 0.0});
  for (ElementId id : q) {
    const auto& vals = table.element_values[static_cast<std::size_t>(id)];
    for (std::size_t j = 0; j < dvals.size(); ++j) dvals[j] += vals[j];
  }
  return dvals;
}

}  // namespace

DirichletNorm dirichlet_norm(const Lattice& lat, std::span<const ElementId> q,
                             double p_prime, Frontend frontend,
                             const DirichletOptions& opts) {
  if (q.empty()) {
    throw std::domain_error("Dirichlet kernel over an empty spectrum");
  }
  if (!(p_prime >= 1.0)) {
    throw std::domain_error("dirichlet_norm requires p' in [1, inf]");
  }

  if (p_prime == 2.0) {
    // Plancherel: ||D_Q||_2^2 = nu(Q) on both frontends.
    return {std::sqrt(nu_measure(lat, q)), 0.0};
  }

  if (std::isinf(p_prime)) {
    const KernelTable coarse = make_table(lat, frontend, opts, 1);
    const KernelTable fine = make_table(lat, frontend, opts, 2);
    const double v1 = coarse.sup(assemble(coarse, q));
    const double v2 = fine.sup(assemble(fine, q));
    return {v2, std::abs(v2 - v1)};
  }

  const KernelTable table = make_table(lat, frontend, opts, 1);
  return {table.norm(assemble(table, q), p_prime), 0.0};
}

CharacterizationResult characterization_constant(const Lattice& lat,
                                                 const SubsetFamily& fam,
                                                 double p, Frontend frontend,
                                                 const DirichletOptions& opts) {
  if (!(p > 1.0)) {
    throw std::domain_error("characterization requires p in (1, inf]");
  }
  if (&fam.lattice() != &lat) {
    throw std::invalid_argument("family lives on a different lattice");
  }
  const double p_prime = conjugate_exponent(p);
  const bool plancherel = p_prime == 2.0;

  KernelTable table;
  if (!plancherel) table = make_table(lat, frontend, opts, 1);

  const std::vector<double> levels = lat.distinct_lambdas();

  struct LevelBest {
    bool found = false;
    double ratio = 0.0;  // ||D_Q|| / nu(Q)
    double nu = 0.0;
    double norm = 0.0;
    Subset q;
  };
  std::vector<LevelBest> best(levels.size());

  // Incremental kernel values synchronized with the enumeration stack:
  // consecutive members share prefixes, so updates are push/pop diffs.
  std::vector<std::complex<double>> dvals(
      plancherel ? 0 : table.weights.size(), {0.0, 0.0});
  Subset prev;

  fam.for_each_member(0.0, [&](std::span<const ElementId> q, double nu) {
    auto it = std::upper_bound(levels.begin(), levels.end(), nu);
    double norm = 0.0;
    if (plancherel) {
      norm = std::sqrt(nu);
    } else {
      std::size_t common = 0;
      while (common < prev.size() && common < q.size() &&
             prev[common] == q[common]) {
        ++common;
      }
      for (std::size_t i = prev.size(); i-- > common;) {
        const auto& vals =
            table.element_values[static_cast<std::size_t>(prev[i])];
        for (std::size_t j = 0; j < dvals.size(); ++j) dvals[j] -= vals[j];
      }
      for (std::size_t i = common; i < q.size(); ++i) {
        const auto& vals =
            table.element_values[static_cast<std::size_t>(q[i])];
        for (std::size_t j = 0; j < dvals.size(); ++j) dvals[j] += vals[j];
      }
      prev.assign(q.begin(), q.end());
      norm = std::isinf(p_prime) ? table.sup(dvals)
                                 : table.norm(dvals, p_prime);
    }
    if (it == levels.begin()) return;  // nu below every level
    const std::size_t b = static_cast<std::size_t>(it - levels.begin()) - 1;
    const double ratio = norm / nu;
    if (!best[b].found || ratio > best[b].ratio) {
      best[b] = {true, ratio, nu, norm, Subset(q.begin(), q.end())};
    }
  });

  // Suffix-max: a subset admissible at a level is admissible below it.
  for (std::size_t i = levels.size(); i-- > 1;) {
    if (best[i].found &&
        (!best[i - 1].found || best[i].ratio > best[i - 1].ratio)) {
      best[i - 1] = best[i];
    }
  }

  CharacterizationResult result;
  result.rows.reserve(lat.size());
  for (const LatticeElement& e : lat.elements()) {
    auto it = std::lower_bound(levels.begin(), levels.end(), e.lambda);
    const std::size_t b = static_cast<std::size_t>(it - levels.begin());
    CharacterizationRow row;
    row.pi = e.id;
    row.pi_label = e.label;
    row.lambda = e.lambda;
    if (best[b].found) {
      row.feasible = true;
      row.q = best[b].q;
      row.nu_q = best[b].nu;
      row.dq_norm = best[b].norm;
      row.ratio = std::pow(e.lambda, 1.0 / p_prime) * best[b].ratio;
      if (row.ratio > result.constant) {
        result.constant = row.ratio;
        result.witness_pi = e.id;
        result.witness_q = row.q;
        result.witness_nu = row.nu_q;
        result.witness_norm = row.dq_norm;
      }
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

RearrangementBoundReport rearrangement_bound_check(int start, int step,
                                                   int length, double p,
                                                   int grid_m) {
  if (length < 1) throw std::domain_error("progression length must be >= 1");
  if (!(p > 1.0) || std::isinf(p)) {
    throw std::domain_error("rearrangement bound requires 1 < p < inf");
  }
  const double p_prime = conjugate_exponent(p);

  std::vector<double> absvals(static_cast<std::size_t>(grid_m));
  for (int j = 0; j < grid_m; ++j) {
    CompensatedComplexSum d;
    for (int k = 0; k < length; ++k) {
      const long long mode = static_cast<long long>(start) +
                             static_cast<long long>(k) * step;
      const double phase = 2.0 * M_PI *
                           static_cast<double>(mode % grid_m) * j / grid_m;
      d += std::complex<double>{std::cos(phase), std::sin(phase)};
    }
    absvals[static_cast<std::size_t>(j)] = std::abs(d.value());
  }
  std::sort(absvals.begin(), absvals.end(), std::greater<>());

  RearrangementBoundReport rep;
  rep.grid_m = grid_m;
  rep.length = length;
  const double denom = std::pow(static_cast<double>(length), 1.0 / p);
  // D* is constant on ((k-1)/M, k/M]; t^(1/p') peaks at the right edge, and
  // the k = 1 cell lies below the grid-spacing cutoff.
  for (int k = 2; k <= grid_m; ++k) {
    const double t = static_cast<double>(k) / grid_m;
    const double value =
        absvals[static_cast<std::size_t>(k - 1)] * std::pow(t, 1.0 / p_prime) /
        denom;
    if (value > rep.constant) {
      rep.constant = value;
      rep.achieved_at_t = t;
    }
  }
  return rep;
}

}  // namespace netspace
