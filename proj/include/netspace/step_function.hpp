#pragma once

#include <utility>
#include <vector>

namespace netspace {

/// Finitely supported decreasing rearrangement: steps (value, mass) with
/// strictly decreasing values after canonicalization. All Lorentz norms in
/// the project are evaluated through this representation, in closed form
/// per step.
class StepFunction {
 public:
  struct Step {
    double value;
    double mass;
  };

  StepFunction() = default;

  /// Builds f* from unordered atoms (value >= 0, mass > 0).
  static StepFunction from_atoms(std::vector<Step> atoms);

  const std::vector<Step>& steps() const { return steps_; }
  double total_mass() const { return total_mass_; }

  /// f*(t) for t in (0, total_mass]; 0 beyond the support.
  double value_at(double t) const;

  /// (integral of f*^p dt)^(1/p); equals the L^p norm of any function this
  /// rearranges.
  double lp_norm(double p) const;

  /// || t^(1/p) f*(t) ||_{L^q(dt/t)}; q may be infinity.
  double lorentz_norm(double p, double q) const;

  double sup_value() const { return steps_.empty() ? 0.0 : steps_.front().value; }

 private:
  std::vector<Step> steps_;
  double total_mass_ = 0.0;
};

}  // namespace netspace
