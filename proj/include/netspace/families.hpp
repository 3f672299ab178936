#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netspace/lattice.hpp"

namespace netspace {

/// A family member: element ids, sorted ascending.
using Subset = std::vector<ElementId>;

enum class FamilyKind {
  AllSubsets,
  ArithmeticProgressions,
  Segments,
  ExplicitList,
};

struct FamilyCaps {
  std::size_t max_cardinality = std::numeric_limits<std::size_t>::max();
  std::size_t max_count = 5'000'000;
  /// All-subsets enumeration refuses lattices larger than this.
  std::size_t all_subsets_hard_cap = 22;
};

/// Immutable descriptor of a collection M of finite subsets of a lattice
/// truncation. Enumeration order is lexicographic on the sorted-id
/// encodings, so runs are reproducible.
class SubsetFamily {
 public:
  static SubsetFamily all_subsets(const Lattice& lat, FamilyCaps caps = {});
  /// Arithmetic progressions {a + k v : 0 <= k < L} in an integer lattice;
  /// for n > 1 the step v ranges over lexicographically positive vectors.
  static SubsetFamily progressions(const Lattice& lat, FamilyCaps caps = {});
  /// Initial lambda-segments {theta : lambda_theta <= c}, one per distinct
  /// cutoff c in the truncation.
  static SubsetFamily segments(const Lattice& lat);
  static SubsetFamily explicit_list(const Lattice& lat,
                                    std::vector<Subset> members);
  /// Explicit-list family from a JSON array of arrays of element labels.
  static SubsetFamily explicit_from_json(const Lattice& lat,
                                         const nlohmann::json& j);

  FamilyKind kind() const { return kind_; }
  const Lattice& lattice() const { return *lattice_; }
  const FamilyCaps& caps() const { return caps_; }

  /// Visits every member Q with nu(Q) >= min_nu, in deterministic order.
  /// The span is only valid during the callback.
  void for_each_member(
      double min_nu,
      const std::function<void(std::span<const ElementId>, double nu)>& fn)
      const;

  std::vector<Subset> enumerate_with_capacity(double min_nu) const;

  /// Structural membership test (ids must be sorted ascending). Caps do not
  /// apply: this asks whether Q belongs to the family as defined.
  bool is_member(std::span<const ElementId> sorted_ids) const;

  std::string describe() const;

 private:
  SubsetFamily(FamilyKind kind, const Lattice& lat, FamilyCaps caps)
      : kind_(kind), lattice_(&lat), caps_(caps) {}

  void build_progressions();

  FamilyKind kind_;
  const Lattice* lattice_;
  FamilyCaps caps_;
  // Materialized members for every kind except all-subsets, sorted
  // lexicographically; nu cached alongside.
  std::vector<Subset> members_;
  std::vector<double> member_nu_;
};

/// True iff every member of a (under a's caps) is structurally a member
/// of b.
bool family_contains(const SubsetFamily& a, const SubsetFamily& b);

}  // namespace netspace
