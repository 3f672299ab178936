#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netspace/coefficient_net.hpp"
#include "netspace/families.hpp"

namespace netspace {

enum class Engine {
  Exact,      ///< exhaustive family sweep (all-subsets hard-capped)
  Heuristic,  ///< phase-grid + Dinkelbach ratio ascent; certified lower bound
  Auto,       ///< exact when enumerable, heuristic otherwise
};

/// Measure used by the averaging sup for admissibility and normalization.
/// LambdaMax replaces nu(Q) by max of lambda over Q; it realizes the
/// top-weight segment normalization used by the SU(2) converse cross-check.
enum class MeasureMode { Standard, LambdaMax };

struct NormParams {
  double p = 2.0;  ///< 1 <= p < inf
  double q = 2.0;  ///< 1 <= q <= inf (infinity() for the sup form)
};

struct AveragingEntry {
  double level = 0.0;
  double value = 0.0;
  Subset witness;                 ///< achieving Q; empty when none admissible
  bool lower_bound_only = false;  ///< heuristic engine could not certify
};

/// The averaging function evaluated on a fixed grid of levels, ascending.
/// Monotone nonincreasing in the level by construction.
struct AveragingTable {
  std::vector<AveragingEntry> entries;
  bool exact = true;

  double value_at(double level) const;
  std::size_t monotonicity_violations(double tol = 1e-12) const;
};

AveragingTable averaging_table(const CoefficientNet& F,
                               const SubsetFamily& fam,
                               std::vector<double> levels, Engine engine,
                               MeasureMode mode = MeasureMode::Standard);

/// sup over Q in fam with nu(Q) >= level of |sum over Q of
/// delta_theta Tr F(theta)| / nu(Q); 0 when no Q is admissible.
double averaging(const CoefficientNet& F, double level,
                 const SubsetFamily& fam, Engine engine = Engine::Auto,
                 MeasureMode mode = MeasureMode::Standard);

struct NetNormResult {
  double value = 0.0;
  bool exact = true;
  AveragingTable table;  ///< one entry per distinct lambda level
};

NetNormResult net_norm(const CoefficientNet& F, const SubsetFamily& fam,
                       const NormParams& params, Engine engine = Engine::Auto,
                       MeasureMode mode = MeasureMode::Standard);

/// Weighted Hilbert-Schmidt norm
///   ( sum delta_pi kappa_pi^(p(1/p - 1/2)) ||h(pi)||_HS^p )^(1/p).
double ellp_norm(const CoefficientNet& h, double p);

struct DualityGapReport {
  double norm = 0.0;
  double extremizer_quotient = 0.0;
  double gap = 0.0;  ///< |extremizer_quotient - norm|
  /// max over random g of quotient(g)/norm - 1 (negative when all below)
  double max_random_excess = 0.0;
  int random_trials = 0;
};

/// Checks the duality
///   ||h||_p = sup_g |sum delta Tr(h g*)| / ||g||_{p'}
/// by evaluating the closed-form extremizer g*(pi) =
/// (||h(pi)||_HS / sqrt(kappa_pi))^(p - p') / p' * h(pi) scaling and
/// stress-testing random g against the norm bound. Requires 1 < p < inf.
DualityGapReport ellp_duality_gap(const CoefficientNet& h, double p,
                                  int random_trials = 100,
                                  std::uint64_t seed = 1);

/// Lorentz norm of the atom sequence a_pi = kappa^(-1/2) ||F(pi)||_HS on
/// (Gamma, nu): atoms of mass delta*kappa, closed-form per step. Coincides
/// with ellp_norm at q = p.
double lorentz_discrete_norm(const CoefficientNet& F, double p, double q);

}  // namespace netspace
