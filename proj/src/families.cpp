#include "netspace/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace netspace {

namespace {

void sort_and_finalize(std::vector<Subset>& members, const Lattice& lat,
                       std::vector<double>& nu_out) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  nu_out.clear();
  nu_out.reserve(members.size());
  for (const Subset& q : members) nu_out.push_back(nu_measure(lat, q));
}

}  // namespace

SubsetFamily SubsetFamily::all_subsets(const Lattice& lat, FamilyCaps caps) {
  return SubsetFamily(FamilyKind::AllSubsets, lat, caps);
}

SubsetFamily SubsetFamily::segments(const Lattice& lat) {
  SubsetFamily fam(FamilyKind::Segments, lat, FamilyCaps{});
  const auto& elems = lat.elements();
  Subset prefix;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    prefix.push_back(static_cast<ElementId>(i));
    const bool tie_continues =
        i + 1 < elems.size() && elems[i + 1].lambda == elems[i].lambda;
    if (!tie_continues) fam.members_.push_back(prefix);
  }
  sort_and_finalize(fam.members_, lat, fam.member_nu_);
  return fam;
}

SubsetFamily SubsetFamily::explicit_list(const Lattice& lat,
                                         std::vector<Subset> members) {
  SubsetFamily fam(FamilyKind::ExplicitList, lat, FamilyCaps{});
  for (Subset& q : members) {
    if (q.empty()) {
      throw std::invalid_argument("explicit family members must be nonempty");
    }
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    for (ElementId id : q) lat.element(id);  // validates
  }
  fam.members_ = std::move(members);
  sort_and_finalize(fam.members_, lat, fam.member_nu_);
  return fam;
}

SubsetFamily SubsetFamily::explicit_from_json(const Lattice& lat,
                                              const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument(
        "explicit family JSON must be an array of arrays of labels");
  }
  std::vector<Subset> members;
  members.reserve(j.size());
  for (const auto& entry : j) {
    Subset q;
    for (const auto& label : entry) {
      const ElementId id = lat.find_label(label.get<std::string>());
      if (id < 0) {
        throw std::domain_error("unknown element label " +
                                label.get<std::string>());
      }
      q.push_back(id);
    }
    members.push_back(std::move(q));
  }
  return explicit_list(lat, std::move(members));
}

SubsetFamily SubsetFamily::progressions(const Lattice& lat, FamilyCaps caps) {
  if (lat.kind() != LatticeKind::IntegerLattice) {
    throw std::invalid_argument(
        "progression families require an integer lattice");
  }
  SubsetFamily fam(FamilyKind::ArithmeticProgressions, lat, caps);
  fam.build_progressions();
  return fam;
}

void SubsetFamily::build_progressions() {
  const Lattice& lat = *lattice_;
  const auto& coords = lat.coordinates();
  const int n = lat.dimension();

  std::map<std::vector<int>, ElementId> index;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    index.emplace(coords[i], static_cast<ElementId>(i));
  }

  // Singletons once; every longer progression has a unique representation
  // (start, lex-positive step, length).
  for (std::size_t i = 0; i < coords.size(); ++i) {
    members_.push_back({static_cast<ElementId>(i)});
  }

  int lo = 0, hi = 0;
  for (const auto& m : coords) {
    for (int c : m) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  const int span = hi - lo;

  std::vector<int> step(static_cast<std::size_t>(n), -span);
  auto lex_positive = [](const std::vector<int>& v) {
    for (int c : v) {
      if (c != 0) return c > 0;
    }
    return false;
  };

  bool done = false;
  while (!done) {
    if (lex_positive(step)) {
      for (std::size_t start = 0; start < coords.size(); ++start) {
        Subset run{static_cast<ElementId>(start)};
        std::vector<int> point = coords[start];
        while (true) {
          for (int d = 0; d < n; ++d) {
            point[static_cast<std::size_t>(d)] += step[static_cast<std::size_t>(d)];
          }
          auto it = index.find(point);
          if (it == index.end()) break;
          run.push_back(it->second);
          if (run.size() > caps_.max_cardinality) break;
          Subset member = run;
          std::sort(member.begin(), member.end());
          members_.push_back(std::move(member));
          if (members_.size() > caps_.max_count) {
            throw std::invalid_argument(
                "progression family exceeds max_count cap of " +
                std::to_string(caps_.max_count));
          }
        }
      }
    }
    int d = n - 1;
    while (d >= 0 && step[static_cast<std::size_t>(d)] == span) {
      step[static_cast<std::size_t>(d)] = -span;
      --d;
    }
    if (d < 0) {
      done = true;
    } else {
      ++step[static_cast<std::size_t>(d)];
    }
  }

  sort_and_finalize(members_, lat, member_nu_);
}

void SubsetFamily::for_each_member(
    double min_nu,
    const std::function<void(std::span<const ElementId>, double)>& fn) const {
  if (min_nu < 0.0) {
    throw std::domain_error("min_nu must be nonnegative");
  }

  if (kind_ != FamilyKind::AllSubsets) {
    std::size_t emitted = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (member_nu_[i] >= min_nu &&
          members_[i].size() <= caps_.max_cardinality) {
        fn(members_[i], member_nu_[i]);
        if (++emitted >= caps_.max_count) return;
      }
    }
    return;
  }

  const std::size_t n = lattice_->size();
  if (n > caps_.all_subsets_hard_cap) {
    throw std::invalid_argument(
        "exact engine capped at " + std::to_string(caps_.all_subsets_hard_cap) +
        " elements (lattice has " + std::to_string(n) +
        "); use heuristic engine");
  }

  // Depth-first over sorted-id prefixes = lexicographic member order.
  Subset stack;
  stack.reserve(n);
  std::size_t emitted = 0;
  double nu = 0.0;

  auto recurse = [&](auto&& self, ElementId next) -> bool {
    for (ElementId id = next; id < static_cast<ElementId>(n); ++id) {
      stack.push_back(id);
      nu += lattice_->pair_weight(id);
      if (nu >= min_nu) {
        fn(stack, nu);
        if (++emitted >= caps_.max_count) return false;
      }
      if (stack.size() < caps_.max_cardinality) {
        if (!self(self, id + 1)) return false;
      }
      nu -= lattice_->pair_weight(id);
      stack.pop_back();
    }
    return true;
  };
  recurse(recurse, 0);
}

std::vector<Subset> SubsetFamily::enumerate_with_capacity(
    double min_nu) const {
  std::vector<Subset> out;
  for_each_member(min_nu, [&](std::span<const ElementId> q, double) {
    out.emplace_back(q.begin(), q.end());
  });
  return out;
}

bool SubsetFamily::is_member(std::span<const ElementId> sorted_ids) const {
  if (sorted_ids.empty()) return false;
  for (std::size_t i = 0; i < sorted_ids.size(); ++i) {
    lattice_->element(sorted_ids[i]);
    if (i > 0 && sorted_ids[i] <= sorted_ids[i - 1]) {
      throw std::invalid_argument("is_member expects strictly sorted ids");
    }
  }

  switch (kind_) {
    case FamilyKind::AllSubsets:
      return true;
    case FamilyKind::Segments: {
      // Must be exactly {0, ..., k} and not cut a lambda tie.
      const std::size_t k = sorted_ids.size() - 1;
      if (sorted_ids.back() != static_cast<ElementId>(k)) return false;
      const auto& elems = lattice_->elements();
      return k + 1 == elems.size() ||
             elems[k + 1].lambda != elems[k].lambda;
    }
    case FamilyKind::ArithmeticProgressions: {
      if (sorted_ids.size() <= 1) return true;
      const auto& coords = lattice_->coordinates();
      std::vector<std::vector<int>> pts;
      pts.reserve(sorted_ids.size());
      for (ElementId id : sorted_ids) {
        pts.push_back(coords[static_cast<std::size_t>(id)]);
      }
      std::sort(pts.begin(), pts.end());
      std::vector<int> step(pts[0].size());
      for (std::size_t d = 0; d < step.size(); ++d) {
        step[d] = pts[1][d] - pts[0][d];
      }
      for (std::size_t i = 2; i < pts.size(); ++i) {
        for (std::size_t d = 0; d < step.size(); ++d) {
          if (pts[i][d] - pts[i - 1][d] != step[d]) return false;
        }
      }
      return true;
    }
    case FamilyKind::ExplicitList: {
      Subset key(sorted_ids.begin(), sorted_ids.end());
      return std::binary_search(members_.begin(), members_.end(), key);
    }
  }
  return false;
}

std::string SubsetFamily::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case FamilyKind::AllSubsets:
      os << "all-subsets";
      break;
    case FamilyKind::ArithmeticProgressions:
      os << "arithmetic-progressions";
      break;
    case FamilyKind::Segments:
      os << "segments";
      break;
    case FamilyKind::ExplicitList:
      os << "explicit-list(" << members_.size() << ")";
      break;
  }
  return os.str();
}

bool family_contains(const SubsetFamily& a, const SubsetFamily& b) {
  bool contained = true;
  a.for_each_member(0.0, [&](std::span<const ElementId> q, double) {
    if (contained && !b.is_member(q)) contained = false;
  });
  return contained;
}

}  // namespace netspace
