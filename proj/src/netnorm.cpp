#include "netspace/netnorm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include "netspace/step_function.hpp"
#include "netspace/summation.hpp"

namespace netspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_levels(std::vector<double>& levels) {
  for (double level : levels) {
    if (!(level > 0.0) || !std::isfinite(level)) {
      throw std::domain_error("averaging level must be positive");
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
}

struct BucketBest {
  bool found = false;
  double value = 0.0;
  Subset witness;
};

/// Largest index i with levels[i] <= x, or npos when x < levels[0].
std::size_t bucket_of(const std::vector<double>& levels, double x) {
  auto it = std::upper_bound(levels.begin(), levels.end(), x);
  if (it == levels.begin()) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(it - levels.begin()) - 1;
}

AveragingTable exact_table(const CoefficientNet& F, const SubsetFamily& fam,
                           const std::vector<double>& levels,
                           MeasureMode mode) {
  const Lattice& lat = F.lattice();
  std::vector<std::complex<double>> v(lat.size());
  for (const LatticeElement& e : lat.elements()) {
    v[static_cast<std::size_t>(e.id)] = F.weighted_trace(e.id);
  }

  std::vector<BucketBest> best(levels.size());
  fam.for_each_member(0.0, [&](std::span<const ElementId> q, double nu) {
    // ids are lambda-sorted, so the last one carries the largest lambda
    const double nu_eff =
        mode == MeasureMode::Standard ? nu : lat.lambda(q.back());
    const std::size_t b = bucket_of(levels, nu_eff);
    if (b == std::numeric_limits<std::size_t>::max()) return;
    CompensatedComplexSum sum;
    for (ElementId id : q) sum += v[static_cast<std::size_t>(id)];
    const double ratio = std::abs(sum.value()) / nu_eff;
    if (!best[b].found || ratio > best[b].value) {
      best[b].found = true;
      best[b].value = ratio;
      best[b].witness.assign(q.begin(), q.end());
    }
  });

  AveragingTable table;
  table.exact = true;
  table.entries.resize(levels.size());
  BucketBest running;
  for (std::size_t i = levels.size(); i-- > 0;) {
    if (best[i].found && (!running.found || best[i].value > running.value)) {
      running = best[i];
    }
    AveragingEntry& e = table.entries[i];
    e.level = levels[i];
    e.value = running.found ? running.value : 0.0;
    e.witness = running.witness;
    e.lower_bound_only = false;
  }
  return table;
}

/// Candidate generator for the heuristic engine: a fixed item order with
/// prefix sums. Every prefix is a feasible-subset candidate once its
/// capacity clears the level; suffix-max over prefixes then yields the best
/// candidate per level in O(log n).
struct PrefixChain {
  std::vector<ElementId> order;
  std::vector<double> cum_capacity;  // cum_capacity[k] = nu of first k items
  std::vector<double> ratio;         // ratio[k] = |sum v| / nu of first k
  std::vector<double> suffix_best;   // max ratio over prefixes >= k
  std::vector<std::size_t> suffix_arg;

  void finalize(const std::vector<std::complex<double>>& v,
                const std::vector<double>& c) {
    const std::size_t n = order.size();
    cum_capacity.assign(n + 1, 0.0);
    ratio.assign(n + 1, 0.0);
    CompensatedSum cap;
    CompensatedComplexSum sum;
    for (std::size_t k = 0; k < n; ++k) {
      const auto id = static_cast<std::size_t>(order[k]);
      cap += c[id];
      sum += v[id];
      cum_capacity[k + 1] = cap.value();
      ratio[k + 1] = std::abs(sum.value()) / cap.value();
    }
    suffix_best.assign(n + 2, -1.0);
    suffix_arg.assign(n + 2, 0);
    for (std::size_t k = n; k > 0; --k) {
      if (ratio[k] > suffix_best[k + 1]) {
        suffix_best[k] = ratio[k];
        suffix_arg[k] = k;
      } else {
        suffix_best[k] = suffix_best[k + 1];
        suffix_arg[k] = suffix_arg[k + 1];
      }
    }
  }

  /// Best prefix with capacity >= level; returns prefix length or 0.
  std::size_t best_feasible(double level, double& value) const {
    auto it = std::lower_bound(cum_capacity.begin() + 1, cum_capacity.end(),
                               level);
    if (it == cum_capacity.end()) return 0;
    const auto k = static_cast<std::size_t>(it - cum_capacity.begin());
    value = suffix_best[k];
    return suffix_arg[k];
  }
};

AveragingTable heuristic_table(const CoefficientNet& F,
                               const std::vector<double>& levels) {
  const Lattice& lat = F.lattice();
  const std::size_t n = lat.size();
  std::vector<std::complex<double>> v(n);
  std::vector<double> c(n);
  for (const LatticeElement& e : lat.elements()) {
    v[static_cast<std::size_t>(e.id)] = F.weighted_trace(e.id);
    c[static_cast<std::size_t>(e.id)] = lat.pair_weight(e.id);
  }

  // Phase grid: the ratio |sum v|/nu is approached through
  // Re(e^{-i phi} sum v)/nu; two phases suffice for real nets.
  const int phase_count = F.is_real() ? 2 : 64;

  std::vector<PrefixChain> chains;
  chains.reserve(static_cast<std::size_t>(phase_count) + 2);

  for (int pk = 0; pk < phase_count; ++pk) {
    const double phi =
        phase_count == 2 ? pk * M_PI : 2.0 * M_PI * pk / 64.0;
    const std::complex<double> rot(std::cos(phi), -std::sin(phi));
    PrefixChain chain;
    chain.order.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      chain.order[i] = static_cast<ElementId>(i);
    }
    // Dinkelbach closure: every iterate of the ratio ascent (take items with
    // positive reduced value, then greedy fill by value-per-capacity) is a
    // prefix of this order, so scanning all prefixes dominates the ascent.
    std::vector<double> key(n);
    for (std::size_t i = 0; i < n; ++i) {
      key[i] = (rot * v[i]).real() / c[i];
    }
    std::stable_sort(chain.order.begin(), chain.order.end(),
                     [&](ElementId a, ElementId b) {
                       return key[static_cast<std::size_t>(a)] >
                              key[static_cast<std::size_t>(b)];
                     });
    chain.finalize(v, c);
    chains.push_back(std::move(chain));
  }

  // Lambda-segment prefixes (id order) as structural seeds.
  {
    PrefixChain chain;
    chain.order.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      chain.order[i] = static_cast<ElementId>(i);
    }
    chain.finalize(v, c);
    chains.push_back(std::move(chain));
  }
  // Largest-|v|-per-capacity order; its length-1 prefix is the best
  // singleton once feasible.
  {
    PrefixChain chain;
    chain.order.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      chain.order[i] = static_cast<ElementId>(i);
    }
    std::stable_sort(chain.order.begin(), chain.order.end(),
                     [&](ElementId a, ElementId b) {
                       return std::abs(v[static_cast<std::size_t>(a)]) /
                                  c[static_cast<std::size_t>(a)] >
                              std::abs(v[static_cast<std::size_t>(b)]) /
                                  c[static_cast<std::size_t>(b)];
                     });
    chain.finalize(v, c);
    chains.push_back(std::move(chain));
  }

  const double capacity_total = lat.nu_total();

  AveragingTable table;
  table.exact = false;
  table.entries.resize(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    AveragingEntry& e = table.entries[i];
    e.level = levels[i];
    if (levels[i] > capacity_total) {
      // no admissible subset exists at all: the zero value is exact
      e.value = 0.0;
      e.lower_bound_only = false;
      continue;
    }
    e.lower_bound_only = true;
    double best_value = -1.0;
    const PrefixChain* best_chain = nullptr;
    std::size_t best_k = 0;
    for (const PrefixChain& chain : chains) {
      double value = -1.0;
      const std::size_t k = chain.best_feasible(levels[i], value);
      if (k > 0 && value > best_value) {
        best_value = value;
        best_chain = &chain;
        best_k = k;
      }
    }
    if (best_chain != nullptr) {
      e.value = best_value;
      e.witness.assign(best_chain->order.begin(),
                       best_chain->order.begin() + static_cast<long>(best_k));
      std::sort(e.witness.begin(), e.witness.end());
    }
  }

  // A subset admissible at a higher level stays admissible below it, so the
  // table can be monotonized without leaving the lower-bound contract.
  for (std::size_t i = levels.size(); i-- > 1;) {
    AveragingEntry& hi = table.entries[i];
    AveragingEntry& lo = table.entries[i - 1];
    if (hi.value > lo.value) {
      lo.value = hi.value;
      lo.witness = hi.witness;
      lo.lower_bound_only = hi.lower_bound_only;
    }
  }
  return table;
}

}  // namespace

double AveragingTable::value_at(double level) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), level,
      [](const AveragingEntry& e, double x) { return e.level < x; });
  if (it == entries.end() || it->level != level) {
    throw std::invalid_argument("level not present in averaging table");
  }
  return it->value;
}

std::size_t AveragingTable::monotonicity_violations(double tol) const {
  std::size_t count = 0;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const double allowed =
        entries[i - 1].value + tol * std::max(1.0, entries[i - 1].value);
    if (entries[i].value > allowed) ++count;
  }
  return count;
}

AveragingTable averaging_table(const CoefficientNet& F,
                               const SubsetFamily& fam,
                               std::vector<double> levels, Engine engine,
                               MeasureMode mode) {
  if (&F.lattice() != &fam.lattice()) {
    throw std::invalid_argument("net and family lattices differ");
  }
  validate_levels(levels);
  if (levels.empty()) return {};

  bool heuristic = false;
  if (fam.kind() == FamilyKind::AllSubsets) {
    const bool over_cap = fam.lattice().size() > fam.caps().all_subsets_hard_cap;
    if (engine == Engine::Heuristic || (engine == Engine::Auto && over_cap)) {
      heuristic = true;
    }
  }

  if (heuristic) {
    if (mode != MeasureMode::Standard) {
      throw std::invalid_argument(
          "heuristic engine supports the standard measure only");
    }
    return heuristic_table(F, levels);
  }
  return exact_table(F, fam, levels, mode);
}

double averaging(const CoefficientNet& F, double level,
                 const SubsetFamily& fam, Engine engine, MeasureMode mode) {
  return averaging_table(F, fam, {level}, engine, mode).entries.at(0).value;
}

NetNormResult net_norm(const CoefficientNet& F, const SubsetFamily& fam,
                       const NormParams& params, Engine engine,
                       MeasureMode mode) {
  if (!(params.p >= 1.0) || std::isinf(params.p)) {
    throw std::domain_error("net norm requires 1 <= p < inf");
  }
  if (!(params.q >= 1.0)) {
    throw std::domain_error("net norm requires 1 <= q <= inf");
  }

  const Lattice& lat = F.lattice();
  NetNormResult result;
  result.table =
      averaging_table(F, fam, lat.distinct_lambdas(), engine, mode);
  result.exact = result.table.exact;

  if (std::isinf(params.q)) {
    double best = 0.0;
    for (const AveragingEntry& e : result.table.entries) {
      best = std::max(best, std::pow(e.level, 1.0 / params.p) * e.value);
    }
    result.value = best;
    return result;
  }

  CompensatedSum acc;
  for (const LatticeElement& e : lat.elements()) {
    const double avg = result.table.value_at(e.lambda);
    if (avg == 0.0) continue;
    const double term = std::pow(e.lambda, 1.0 / params.p) * avg;
    acc += std::pow(term, params.q) * lat.pair_weight(e.id) / e.lambda;
  }
  result.value = std::pow(acc.value(), 1.0 / params.q);
  return result;
}

double ellp_norm(const CoefficientNet& h, double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error("ellp_norm requires 1 <= p < inf");
  }
  const Lattice& lat = h.lattice();
  CompensatedSum acc;
  for (const LatticeElement& e : lat.elements()) {
    const double hs = h.hs_norm(e.id);
    if (hs == 0.0) continue;
    acc += static_cast<double>(e.delta) *
           std::pow(static_cast<double>(e.kappa), p * (1.0 / p - 0.5)) *
           std::pow(hs, p);
  }
  return std::pow(acc.value(), 1.0 / p);
}

namespace {

double pairing_quotient(const CoefficientNet& h, const CoefficientNet& g,
                        double p_prime) {
  const Lattice& lat = h.lattice();
  CompensatedComplexSum pairing;
  for (const LatticeElement& e : lat.elements()) {
    pairing += static_cast<double>(e.delta) *
               h.matrix(e.id).cwiseProduct(g.matrix(e.id).conjugate()).sum();
  }
  const double denom = ellp_norm(g, p_prime);
  if (denom == 0.0) return 0.0;
  return std::abs(pairing.value()) / denom;
}

}  // namespace

DualityGapReport ellp_duality_gap(const CoefficientNet& h, double p,
                                  int random_trials, std::uint64_t seed) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw std::domain_error("duality gap requires 1 < p < inf");
  }
  const double p_prime = p / (p - 1.0);
  const Lattice& lat = h.lattice();

  DualityGapReport rep;
  rep.norm = ellp_norm(h, p);
  rep.random_trials = random_trials;
  if (rep.norm == 0.0) return rep;

  // Hoelder is tight for g(pi) = c_pi h(pi) with
  // c_pi^(p') = (||h(pi)||_HS / sqrt(kappa))^(p - p'); the quotient is
  // scale-invariant, so the c's are normalized to peak at 1.
  CoefficientNet extremizer(lat);
  std::vector<double> cs(lat.size(), 0.0);
  double cmax = 0.0;
  for (const LatticeElement& e : lat.elements()) {
    const double a = h.hs_norm(e.id);
    if (a == 0.0) continue;
    const double base = a / std::sqrt(static_cast<double>(e.kappa));
    cs[static_cast<std::size_t>(e.id)] =
        std::pow(base, (p - p_prime) / p_prime);
    cmax = std::max(cmax, cs[static_cast<std::size_t>(e.id)]);
  }
  for (const LatticeElement& e : lat.elements()) {
    extremizer.matrix(e.id) =
        (cs[static_cast<std::size_t>(e.id)] / cmax) * h.matrix(e.id);
  }
  rep.extremizer_quotient = pairing_quotient(h, extremizer, p_prime);
  rep.gap = std::abs(rep.extremizer_quotient - rep.norm);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  rep.max_random_excess = -kInf;
  for (int t = 0; t < random_trials; ++t) {
    CoefficientNet g(lat);
    for (const LatticeElement& e : lat.elements()) {
      Eigen::MatrixXcd& m = g.matrix(e.id);
      for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for (Eigen::Index row = 0; row < m.rows(); ++row) {
          m(row, col) = {gauss(rng), gauss(rng)};
        }
      }
    }
    const double quotient = pairing_quotient(h, g, p_prime);
    rep.max_random_excess =
        std::max(rep.max_random_excess, quotient / rep.norm - 1.0);
  }
  return rep;
}

double lorentz_discrete_norm(const CoefficientNet& F, double p, double q) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw std::domain_error("lorentz_discrete_norm requires 1 < p < inf");
  }
  const Lattice& lat = F.lattice();
  std::vector<StepFunction::Step> atoms;
  atoms.reserve(lat.size());
  for (const LatticeElement& e : lat.elements()) {
    const double value =
        F.hs_norm(e.id) / std::sqrt(static_cast<double>(e.kappa));
    atoms.push_back({value, lat.pair_weight(e.id)});
  }
  return StepFunction::from_atoms(std::move(atoms)).lorentz_norm(p, q);
}

}  // namespace netspace
