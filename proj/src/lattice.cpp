#include "netspace/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netspace/summation.hpp"

namespace netspace {

namespace {

std::string su2_label(int two_l) {
  std::ostringstream os;
  if (two_l % 2 == 0) {
    os << "l=" << two_l / 2;
  } else {
    os << "l=" << two_l << "/2";
  }
  return os.str();
}

std::string integer_label(const std::vector<int>& m) {
  std::ostringstream os;
  os << "m=";
  if (m.size() == 1) {
    os << m[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << ",";
      os << m[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

Lattice::Lattice(std::vector<LatticeElement> elements, int dimension_n,
                 LatticeKind kind)
    : elements_(std::move(elements)), dimension_n_(dimension_n), kind_(kind) {
  if (elements_.empty()) {
    throw std::invalid_argument("lattice must contain at least one element");
  }
  if (dimension_n_ < 1) {
    throw std::invalid_argument("lattice dimension must be positive");
  }
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const LatticeElement& a, const LatticeElement& b) {
                     return a.lambda < b.lambda;
                   });
  CompensatedSum nu;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    LatticeElement& e = elements_[i];
    if (!(e.lambda > 0.0) || !std::isfinite(e.lambda)) {
      throw std::domain_error("lattice weight lambda must be positive: " +
                              e.label);
    }
    if (e.delta < 1 || e.kappa < 1) {
      throw std::domain_error("lattice delta/kappa must be >= 1: " + e.label);
    }
    e.id = static_cast<ElementId>(i);
    nu += static_cast<double>(e.delta) * static_cast<double>(e.kappa);
  }
  nu_total_ = nu.value();
}

const LatticeElement& Lattice::element(ElementId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= elements_.size()) {
    throw std::domain_error("invalid lattice element id " +
                            std::to_string(id));
  }
  return elements_[static_cast<std::size_t>(id)];
}

std::vector<double> Lattice::distinct_lambdas() const {
  std::vector<double> out;
  out.reserve(elements_.size());
  for (const LatticeElement& e : elements_) {
    if (out.empty() || out.back() != e.lambda) out.push_back(e.lambda);
  }
  return out;
}

int Lattice::two_l(ElementId id) const {
  element(id);  // bounds check
  if (kind_ != LatticeKind::Su2Dual || two_l_.empty()) {
    throw std::invalid_argument("two_l is defined only for SU(2) duals");
  }
  return two_l_[static_cast<std::size_t>(id)];
}

ElementId Lattice::find_label(const std::string& label) const {
  for (const LatticeElement& e : elements_) {
    if (e.label == label) return e.id;
  }
  return -1;
}

double nu_measure(const Lattice& lat, std::span<const ElementId> ids) {
  CompensatedSum nu;
  for (ElementId id : ids) nu += lat.pair_weight(id);
  return nu.value();
}

Lattice make_su2_dual(double l_max) {
  const double two_lmax = 2.0 * l_max;
  if (l_max < 0.0 || std::abs(two_lmax - std::round(two_lmax)) > 1e-9) {
    throw std::invalid_argument("l_max must be a nonnegative half-integer");
  }
  const int top = static_cast<int>(std::lround(two_lmax));
  std::vector<LatticeElement> elems;
  std::vector<int> two_l;
  elems.reserve(static_cast<std::size_t>(top) + 1);
  for (int t = 0; t <= top; ++t) {
    const int u = t + 1;  // 2l+1
    LatticeElement e;
    e.label = su2_label(t);
    e.lambda = static_cast<double>(u) * u * u;
    e.delta = u;
    e.kappa = u;
    elems.push_back(std::move(e));
    two_l.push_back(t);
  }
  Lattice lat(std::move(elems), 3, LatticeKind::Su2Dual);
  lat.two_l_ = std::move(two_l);
  return lat;
}

namespace {

long long coord_norm2(const std::vector<int>& m) {
  long long s = 0;
  for (int c : m) s += static_cast<long long>(c) * c;
  return s;
}

/// Sorts points by (|m|, lex) and builds the element records; the lambda
/// assignment is monotone in that order, so the Lattice constructor's
/// stable sort keeps elements and coordinates aligned.
std::vector<LatticeElement> integer_elements(
    std::vector<std::vector<int>>& points, IntegerLambdaRule rule) {
  std::sort(points.begin(), points.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              const long long na = coord_norm2(a), nb = coord_norm2(b);
              if (na != nb) return na < nb;
              return a < b;
            });

  std::vector<LatticeElement> elems;
  elems.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    LatticeElement e;
    e.label = integer_label(points[i]);
    e.delta = 1;
    e.kappa = 1;
    if (rule == IntegerLambdaRule::Rank) {
      e.lambda = static_cast<double>(i + 1);
    } else {
      e.lambda =
          std::max(std::sqrt(static_cast<double>(coord_norm2(points[i]))), 1.0);
    }
    elems.push_back(std::move(e));
  }
  return elems;
}

}  // namespace

Lattice make_integer_lattice(int n, int radius, IntegerLambdaRule rule) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");

  std::vector<std::vector<int>> points;
  std::vector<int> cursor(static_cast<std::size_t>(n), -radius);
  while (true) {
    points.push_back(cursor);
    int d = n - 1;
    while (d >= 0 && cursor[static_cast<std::size_t>(d)] == radius) {
      cursor[static_cast<std::size_t>(d)] = -radius;
      --d;
    }
    if (d < 0) break;
    ++cursor[static_cast<std::size_t>(d)];
  }
  Lattice lat(integer_elements(points, rule), n, LatticeKind::IntegerLattice);
  lat.coords_ = std::move(points);
  return lat;
}

Lattice make_integer_segment(int lo, int hi, IntegerLambdaRule rule) {
  if (lo > hi) throw std::invalid_argument("empty integer segment");
  std::vector<std::vector<int>> points;
  points.reserve(static_cast<std::size_t>(hi - lo) + 1);
  for (int m = lo; m <= hi; ++m) points.push_back({m});
  Lattice lat(integer_elements(points, rule), 1, LatticeKind::IntegerLattice);
  lat.coords_ = std::move(points);
  return lat;
}

Lattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(
        "lattice JSON must be a nonempty array of "
        "{label, lambda, delta, kappa} records");
  }
  std::vector<LatticeElement> elems;
  elems.reserve(j.size());
  for (const auto& rec : j) {
    LatticeElement e;
    e.label = rec.at("label").get<std::string>();
    e.lambda = rec.at("lambda").get<double>();
    e.delta = rec.at("delta").get<int>();
    e.kappa = rec.at("kappa").get<int>();
    if (!(e.lambda > 0.0)) {
      throw std::domain_error("nonpositive lambda for element " + e.label);
    }
    if (e.delta < 1 || e.kappa < 1) {
      throw std::domain_error("nonpositive delta/kappa for element " + e.label);
    }
    elems.push_back(std::move(e));
  }
  return Lattice(std::move(elems), 1, LatticeKind::Generic);
}

namespace {

struct InteriorRange {
  std::size_t begin;
  std::size_t end;
};

InteriorRange interior_half(std::size_t n) {
  InteriorRange r{n / 4, (3 * n) / 4};
  if (r.begin >= r.end) r = {0, n};
  return r;
}

}  // namespace

Assumption3Report check_assumption3(const Lattice& lat, double beta,
                                    TailSide side) {
  if (beta == -1.0) {
    throw std::domain_error("beta = -1 is excluded (log-divergent sums)");
  }
  if (side == TailSide::Below && beta <= -1.0) {
    throw std::invalid_argument("side=below requires beta > -1");
  }
  if (side == TailSide::Above && beta >= -1.0) {
    throw std::invalid_argument("side=above requires beta < -1");
  }

  const auto& elems = lat.elements();
  const std::size_t n = elems.size();

  // Cumulative sums of lambda^beta * delta * kappa in lambda order, with
  // lambda-ties grouped so the theta-ranges are genuine sublevel sets.
  std::vector<double> term(n);
  for (std::size_t i = 0; i < n; ++i) {
    term[i] = std::pow(elems[i].lambda, beta) *
              static_cast<double>(elems[i].delta) *
              static_cast<double>(elems[i].kappa);
  }

  Assumption3Report rep;
  rep.beta = beta;
  rep.side = side;
  rep.ratios.resize(n);

  if (side == TailSide::Below) {
    CompensatedSum acc;
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j < n && elems[j].lambda == elems[i].lambda) {
        acc += term[j];
        ++j;
      }
      const double sum = acc.value();
      const double denom = std::pow(elems[i].lambda, beta + 1.0);
      for (std::size_t k = i; k < j; ++k) rep.ratios[k] = sum / denom;
      i = j;
    }
  } else {
    CompensatedSum acc;
    std::size_t i = n;
    while (i > 0) {
      std::size_t j = i;
      while (j > 0 && elems[j - 1].lambda == elems[i - 1].lambda) {
        acc += term[j - 1];
        --j;
      }
      const double sum = acc.value();
      const double denom = std::pow(elems[j].lambda, beta + 1.0);
      for (std::size_t k = j; k < i; ++k) rep.ratios[k] = sum / denom;
      i = j;
    }
  }

  const InteriorRange interior = interior_half(n);
  rep.interior_begin = interior.begin;
  rep.interior_end = interior.end;
  std::vector<double> window(rep.ratios.begin() + static_cast<long>(interior.begin),
                             rep.ratios.begin() + static_cast<long>(interior.end));
  std::sort(window.begin(), window.end());
  rep.min_ratio = window.front();
  rep.max_ratio = window.back();
  const std::size_t m = window.size();
  rep.median_ratio = (m % 2 == 1)
                         ? window[m / 2]
                         : 0.5 * (window[m / 2 - 1] + window[m / 2]);
  return rep;
}

WeylCountReport weyl_count_check(const Lattice& lat) {
  if (lat.kind() != LatticeKind::Su2Dual) {
    throw std::invalid_argument("weyl_count_check expects an SU(2) dual");
  }

  WeylCountReport rep;
  std::size_t total = 0;
  for (const LatticeElement& e : lat.elements()) {
    total += static_cast<std::size_t>(e.delta) * static_cast<std::size_t>(e.kappa);
  }
  rep.eigenvalue_count = total;
  const InteriorRange interior = interior_half(total);

  rep.full_min = rep.interior_min = std::numeric_limits<double>::infinity();
  rep.full_max = rep.interior_max = 0.0;

  // m_k is constant on each multiplicity block, so m_k/k is extremal at the
  // block's first and last index.
  std::size_t k = 0;
  for (const LatticeElement& e : lat.elements()) {
    const std::size_t mult =
        static_cast<std::size_t>(e.delta) * static_cast<std::size_t>(e.kappa);
    const std::size_t first = k + 1;
    const std::size_t last = k + mult;
    rep.full_max = std::max(rep.full_max, e.lambda / static_cast<double>(first));
    rep.full_min = std::min(rep.full_min, e.lambda / static_cast<double>(last));

    // clip [first, last] (1-based) to the interior window [begin+1, end]
    const std::size_t lo = std::max(first, interior.begin + 1);
    const std::size_t hi = std::min(last, interior.end);
    if (lo <= hi) {
      rep.interior_max =
          std::max(rep.interior_max, e.lambda / static_cast<double>(lo));
      rep.interior_min =
          std::min(rep.interior_min, e.lambda / static_cast<double>(hi));
    }
    k = last;
  }
  return rep;
}

}  // namespace netspace
