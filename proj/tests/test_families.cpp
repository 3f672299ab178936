#include <doctest.h>

#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "netspace/families.hpp"
#include "oracles.hpp"

using namespace netspace;

TEST_CASE("segments with a capacity floor") {
  const Lattice su2 = make_su2_dual(1.0);
  const SubsetFamily fam = SubsetFamily::segments(su2);

  const auto members = fam.enumerate_with_capacity(5.0);
  REQUIRE(members.size() == 2);  // nu = 5 and nu = 14 survive, nu = 1 not
  CHECK(members[0] == Subset{0, 1});
  CHECK(members[1] == Subset{0, 1, 2});

  CHECK(fam.enumerate_with_capacity(0.0).size() == 3);
}

TEST_CASE("segments respect lambda ties") {
  // paper-m rule gives lambda = (1, 1, 1, 2, 2): prefixes may not split ties
  const Lattice zn = make_integer_lattice(1, 2, IntegerLambdaRule::PaperM);
  const SubsetFamily fam = SubsetFamily::segments(zn);
  const auto members = fam.enumerate_with_capacity(0.0);
  REQUIRE(members.size() == 2);
  CHECK(members[0].size() == 3);
  CHECK(members[1].size() == 5);
}

TEST_CASE("progression enumeration matches the triple-scan oracle") {
  const Lattice zn = make_integer_lattice(1, 2);
  const SubsetFamily fam = SubsetFamily::progressions(zn);

  const auto got = fam.enumerate_with_capacity(3.0);
  CHECK(got.size() == 7);

  // brute-force (start, step, length) scan over [-2, 2]
  const auto raw = oracle::progressions_in_interval(-2, 2);
  std::set<std::vector<int>> expected;
  for (const auto& prog : raw) {
    if (prog.size() >= 3) expected.insert(prog);
  }
  std::set<std::vector<int>> actual;
  for (const auto& member : got) {
    std::vector<int> values;
    for (ElementId id : member) {
      values.push_back(zn.coordinates()[static_cast<std::size_t>(id)][0]);
    }
    std::sort(values.begin(), values.end());
    actual.insert(values);
  }
  CHECK(actual == expected);
  CHECK(actual.count({-2, -1, 0}) == 1);
  CHECK(actual.count({-2, 0, 2}) == 1);
  CHECK(actual.count({-2, -1, 0, 1, 2}) == 1);

  // full family against the oracle as well
  CHECK(fam.enumerate_with_capacity(0.0).size() == raw.size());
}

TEST_CASE("progressions in two dimensions follow direction vectors") {
  const Lattice zn = make_integer_lattice(2, 1);
  const SubsetFamily fam = SubsetFamily::progressions(zn);
  const auto members = fam.enumerate_with_capacity(3.0);
  // length-3 progressions in the 3x3 box: 3 rows + 3 columns + 2 diagonals
  CHECK(members.size() == 8);
  for (const auto& member : members) {
    CHECK(fam.is_member(member));
  }
}

TEST_CASE("enumeration is duplicate-free, capacity-exact, deterministic") {
  const Lattice zn = make_integer_lattice(1, 3);
  for (const SubsetFamily& fam :
       {SubsetFamily::all_subsets(zn), SubsetFamily::progressions(zn),
        SubsetFamily::segments(zn)}) {
    const double min_nu = 2.0;
    std::set<Subset> seen;
    fam.for_each_member(min_nu, [&](std::span<const ElementId> q, double nu) {
      CHECK(nu == nu_measure(zn, q));
      CHECK(nu >= min_nu);
      CHECK(!q.empty());
      CHECK(seen.insert(Subset(q.begin(), q.end())).second);
    });
    const auto first = fam.enumerate_with_capacity(min_nu);
    const auto second = fam.enumerate_with_capacity(min_nu);
    CHECK(first == second);
    CHECK(std::is_sorted(first.begin(), first.end()));
  }
}

TEST_CASE("all-subsets count and hard cap") {
  const Lattice zn = make_integer_lattice(1, 3);  // 7 elements
  const SubsetFamily fam = SubsetFamily::all_subsets(zn);
  CHECK(fam.enumerate_with_capacity(0.0).size() == 127);

  const Lattice big = make_integer_lattice(1, 11);  // 23 elements
  const SubsetFamily capped = SubsetFamily::all_subsets(big);
  try {
    capped.for_each_member(0.0, [](std::span<const ElementId>, double) {});
    FAIL("expected the hard-cap refusal");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("use heuristic engine") != std::string::npos);
    CHECK(msg.find("22") != std::string::npos);
  }
}

TEST_CASE("family containment") {
  const Lattice zn = make_integer_lattice(1, 2);
  const SubsetFamily all = SubsetFamily::all_subsets(zn);
  const SubsetFamily progs = SubsetFamily::progressions(zn);
  const SubsetFamily segs = SubsetFamily::segments(zn);

  CHECK(family_contains(progs, all));
  CHECK(family_contains(segs, all));
  CHECK_FALSE(family_contains(all, segs));
  CHECK_FALSE(family_contains(all, progs));  // e.g. {0, -1, 2} is not an AP
  CHECK(family_contains(segs, segs));
}

TEST_CASE("explicit-list family from labels") {
  const Lattice su2 = make_su2_dual(1.0);
  const nlohmann::json j =
      nlohmann::json::array({{"l=0", "l=1"}, {"l=1/2"}});
  const SubsetFamily fam = SubsetFamily::explicit_from_json(su2, j);
  const auto members = fam.enumerate_with_capacity(0.0);
  REQUIRE(members.size() == 2);
  CHECK(members[0] == Subset{0, 2});
  CHECK(members[1] == Subset{1});
  CHECK(fam.is_member(members[0]));
  const Subset other{0, 1};
  CHECK_FALSE(fam.is_member(other));

  const nlohmann::json bad = nlohmann::json::array({{"l=7"}});
  CHECK_THROWS_AS(SubsetFamily::explicit_from_json(su2, bad),
                  std::domain_error);
}
