#pragma once

#include <span>
#include <string>
#include <vector>

#include "netspace/families.hpp"
#include "netspace/lattice.hpp"

namespace netspace {

enum class Frontend { Torus, Su2 };

struct DirichletOptions {
  int grid_m = 4096;   ///< torus realization grid
  int quad_nodes = 0;  ///< SU(2) quadrature nodes; 0 picks automatically
};

struct DirichletNorm {
  double value = 0.0;
  /// Refinement-step discrepancy; nonzero only for p' = inf.
  double uncertainty = 0.0;
};

/// || D_Q ||_{L^{p'}} with D_Q = sum over Q of d_pi Tr pi(x).
/// p' in [1, inf]; p' = 2 is evaluated exactly through Plancherel,
/// p' = inf as a grid max with one refinement step.
DirichletNorm dirichlet_norm(const Lattice& lat, std::span<const ElementId> q,
                             double p_prime, Frontend frontend,
                             const DirichletOptions& opts = {});

struct CharacterizationRow {
  ElementId pi = 0;
  std::string pi_label;
  double lambda = 0.0;
  bool feasible = false;
  Subset q;           ///< inner-sup witness for this pi
  double nu_q = 0.0;
  double dq_norm = 0.0;
  double ratio = 0.0;  ///< lambda^(1/p') * dq_norm / nu_q
};

struct CharacterizationResult {
  double constant = 0.0;  ///< C_{pM}
  ElementId witness_pi = -1;
  Subset witness_q;
  double witness_nu = 0.0;
  double witness_norm = 0.0;
  std::vector<CharacterizationRow> rows;  ///< one per lattice element
};

/// C_{pM} = sup over pi of lambda_pi^(1/p') * sup over Q in M with
/// nu(Q) >= lambda_pi of ||D_Q||_{L^{p'}} / nu(Q), over the truncation,
/// with the achieving (pi, Q) pair reported. Requires p in (1, inf].
CharacterizationResult characterization_constant(const Lattice& lat,
                                                 const SubsetFamily& fam,
                                                 double p, Frontend frontend,
                                                 const DirichletOptions& opts = {});

struct RearrangementBoundReport {
  double constant = 0.0;  ///< sup_t D*(t) t^(1/p') / |Q|^(1/p)
  double achieved_at_t = 0.0;
  int grid_m = 0;
  int length = 0;
};

/// Grid-rearrangement check of D*_Q(t) <~ |Q|^(1/p) / t^(1/p')
/// for the progression Q = {start + k*step : 0 <= k < length} on the torus;
/// the sup runs over t in (grid spacing, 1].
RearrangementBoundReport rearrangement_bound_check(int start, int step,
                                                   int length, double p,
                                                   int grid_m = 4096);

}  // namespace netspace
