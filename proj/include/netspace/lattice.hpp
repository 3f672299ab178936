#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace netspace {

using ElementId = std::int32_t;

/// One point of a weighted ordered lattice: weight lambda, matrix block
/// shape kappa x delta, and the pair weight delta*kappa feeding the
/// counting measure nu.
struct LatticeElement {
  ElementId id = 0;
  std::string label;
  double lambda = 1.0;
  int delta = 1;
  int kappa = 1;
};

enum class LatticeKind { IntegerLattice, Su2Dual, Generic };

enum class IntegerLambdaRule {
  Rank,    ///< lambda = 1-based position in the |m|-sorted enumeration
  PaperM,  ///< lambda = max(|m|, 1)
};

/// Finite truncation of an ordered lattice. Elements are stored sorted by
/// nondecreasing lambda with dense ids 0..N-1; immutable after construction.
class Lattice {
 public:
  Lattice(std::vector<LatticeElement> elements, int dimension_n,
          LatticeKind kind);

  std::size_t size() const { return elements_.size(); }
  const LatticeElement& element(ElementId id) const;
  const std::vector<LatticeElement>& elements() const { return elements_; }

  int dimension() const { return dimension_n_; }
  LatticeKind kind() const { return kind_; }

  double lambda(ElementId id) const { return element(id).lambda; }
  /// delta * kappa, the nu-mass of a single element.
  double pair_weight(ElementId id) const {
    const LatticeElement& e = element(id);
    return static_cast<double>(e.delta) * static_cast<double>(e.kappa);
  }
  double nu_total() const { return nu_total_; }

  /// Ascending distinct lambda values (the levels the averaging runs over).
  std::vector<double> distinct_lambdas() const;

  /// Integer-lattice coordinates (empty unless kind == IntegerLattice).
  const std::vector<std::vector<int>>& coordinates() const { return coords_; }

  /// 2l for the element (Su2Dual lattices only).
  int two_l(ElementId id) const;

  ElementId find_label(const std::string& label) const;  // -1 if absent

 private:
  friend Lattice make_integer_lattice(int, int, IntegerLambdaRule);
  friend Lattice make_integer_segment(int, int, IntegerLambdaRule);
  friend Lattice make_su2_dual(double);

  std::vector<LatticeElement> elements_;
  int dimension_n_ = 1;
  LatticeKind kind_ = LatticeKind::Generic;
  double nu_total_ = 0.0;
  std::vector<std::vector<int>> coords_;
  std::vector<int> two_l_;
};

/// nu(Q) = sum over theta in Q of delta_theta * kappa_theta.
double nu_measure(const Lattice& lat, std::span<const ElementId> ids);

/// SU(2) dual truncated at l_max (a half-integer): l = 0, 1/2, ..., l_max
/// with delta = kappa = 2l+1 and lambda = (2l+1)^3.
Lattice make_su2_dual(double l_max);

/// All m in Z^n with |m|_inf <= radius, delta = kappa = 1, ordered by |m|
/// (ties lexicographic).
Lattice make_integer_lattice(int n, int radius,
                             IntegerLambdaRule rule = IntegerLambdaRule::Rank);

/// The interval {lo, ..., hi} of Z as a 1-D integer lattice (same ordering
/// and lambda rules as make_integer_lattice).
Lattice make_integer_segment(int lo, int hi,
                             IntegerLambdaRule rule = IntegerLambdaRule::Rank);

/// Generic lattice from a JSON array of {label, lambda, delta, kappa}
/// records; sorted by lambda, nonpositive weights rejected.
Lattice lattice_from_json(const nlohmann::json& j);

enum class TailSide { Below, Above };

/// Ratio-range report for the partial-sum growth law
///   sum over lambda_theta <= lambda_pi of lambda^beta * delta * kappa
///     ~ C * lambda_pi^(beta+1)          (side = Below, beta > -1)
/// and its tail-sum analogue (side = Above, beta < -1). Summary statistics
/// are taken over the interior half of the truncation, indices
/// [N/4, 3N/4); the outer quarters carry truncation edge effects.
struct Assumption3Report {
  double beta = 0.0;
  TailSide side = TailSide::Below;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  std::size_t interior_begin = 0;
  std::size_t interior_end = 0;
  std::vector<double> ratios;  ///< R(pi) for every element, in lattice order
};

Assumption3Report check_assumption3(const Lattice& lat, double beta,
                                    TailSide side);

/// Eigenvalue-counting check for the SU(2) dual: enumerates the eigenvalues
/// m_k of (I - Laplacian)^(3/2), i.e. lambda_l with multiplicity (2l+1)^2,
/// and reports the band of m_k / k over the full range and over the
/// interior half of the index range.
struct WeylCountReport {
  double full_min = 0.0;
  double full_max = 0.0;
  double interior_min = 0.0;
  double interior_max = 0.0;
  std::size_t eigenvalue_count = 0;
};

WeylCountReport weyl_count_check(const Lattice& lat);

}  // namespace netspace
