#include "netspace/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "netspace/summation.hpp"

namespace netspace {

StepFunction StepFunction::from_atoms(std::vector<Step> atoms) {
  StepFunction f;
  for (const Step& a : atoms) {
    if (a.value < 0.0 || !(a.mass > 0.0)) {
      throw std::domain_error(
          "rearrangement atoms need value >= 0 and mass > 0");
    }
  }
  std::sort(atoms.begin(), atoms.end(), [](const Step& a, const Step& b) {
    return a.value > b.value;
  });
  CompensatedSum total;
  for (const Step& a : atoms) {
    total += a.mass;
    if (!f.steps_.empty() && f.steps_.back().value == a.value) {
      f.steps_.back().mass += a.mass;
    } else {
      f.steps_.push_back(a);
    }
  }
  f.total_mass_ = total.value();
  return f;
}

double StepFunction::value_at(double t) const {
  if (!(t > 0.0)) {
    throw std::domain_error("rearrangement evaluated at t <= 0");
  }
  double edge = 0.0;
  for (const Step& s : steps_) {
    edge += s.mass;
    if (t <= edge) return s.value;
  }
  return 0.0;
}

double StepFunction::lp_norm(double p) const {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error("lp_norm requires 1 <= p < inf");
  }
  CompensatedSum acc;
  for (const Step& s : steps_) acc += std::pow(s.value, p) * s.mass;
  return std::pow(acc.value(), 1.0 / p);
}

double StepFunction::lorentz_norm(double p, double q) const {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error("lorentz_norm requires 1 <= p < inf");
  }
  if (!(q >= 1.0)) {
    throw std::domain_error("lorentz_norm requires q >= 1");
  }

  if (std::isinf(q)) {
    // sup_t t^(1/p) f*(t): t^(1/p) increases, so each step peaks at its
    // right edge.
    double edge = 0.0;
    double best = 0.0;
    for (const Step& s : steps_) {
      edge += s.mass;
      best = std::max(best, s.value * std::pow(edge, 1.0 / p));
    }
    return best;
  }

  // integral over each step (T0, T1] of (t^(1/p) v)^q dt/t
  //   = v^q * (p/q) * (T1^(q/p) - T0^(q/p))
  CompensatedSum acc;
  double edge = 0.0;
  for (const Step& s : steps_) {
    const double lo = edge;
    edge += s.mass;
    if (s.value == 0.0) continue;
    const double piece = std::pow(edge, q / p) - std::pow(lo, q / p);
    acc += std::pow(s.value, q) * (p / q) * piece;
  }
  return std::pow(acc.value(), 1.0 / q);
}

}  // namespace netspace
