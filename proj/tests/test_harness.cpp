#include <doctest.h>

#include <random>

#include "netspace/harness.hpp"
#include "oracles.hpp"

using namespace netspace;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("corpus spec parsing") {
  const CorpusSpec a = CorpusSpec::parse("random:50:seed=7");
  CHECK(a.kind == CorpusSpec::Kind::Random);
  CHECK(a.size == 50);
  CHECK(a.seed == 7);
  CHECK(a.describe() == "random:50:seed=7:decay=1");

  const CorpusSpec b = CorpusSpec::parse("random:10:seed=3:decay=2");
  CHECK(b.decay == 2);

  CHECK(CorpusSpec::parse("deterministic").kind ==
        CorpusSpec::Kind::Deterministic);
  CHECK_THROWS_AS(CorpusSpec::parse("bogus:1"), std::invalid_argument);
  CHECK_THROWS_AS(CorpusSpec::parse("random"), std::invalid_argument);
  CHECK_THROWS_AS(CorpusSpec::parse("random:5:tilt=1"), std::invalid_argument);
}

TEST_CASE("hl-torus campaign on reference functions") {
  const Lattice zn = make_integer_lattice(1, 4);

  {  // single mode at p = 2: Plancherel makes both sides equal
    CoefficientNet mode(zn);
    mode.matrix(zn.find_label("m=1"))(0, 0) = 1.0;
    const auto rep = verify_hl_torus(zn, {mode}, 2.0, {});
    CHECK(rep.per_function[0].ratio == doctest::Approx(1.0).epsilon(1e-12));
  }
  {  // constant function: ratio 1 for every p
    CoefficientNet constant(zn);
    constant.matrix(zn.find_label("m=0"))(0, 0) = 1.0;
    for (double p : {1.5, 2.0, 3.0}) {
      const auto rep = verify_hl_torus(zn, {constant}, p, {});
      CHECK(rep.per_function[0].ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("hl-torus campaign is stable under bandwidth growth") {
  const CorpusSpec spec = CorpusSpec::parse("random:20:seed=5");
  const Lattice small = make_integer_lattice(1, 20);
  const Lattice large = make_integer_lattice(1, 80);
  const double c_small =
      verify_hl_torus(small, torus_corpus(small, spec), 1.5, {.grid_m = 512})
          .empirical_constant;
  const double c_large =
      verify_hl_torus(large, torus_corpus(large, spec), 1.5, {.grid_m = 512})
          .empirical_constant;
  CHECK(std::isfinite(c_small));
  CHECK(std::isfinite(c_large));
  CHECK(c_large <= 2.0 * c_small);
  CHECK(c_small <= 2.0 * c_large);
}

TEST_CASE("campaign ratios are scale invariant") {
  const Lattice zn = make_integer_lattice(1, 8);
  const CorpusSpec spec = CorpusSpec::parse("random:5:seed=11");
  const std::vector<CoefficientNet> corpus = torus_corpus(zn, spec);
  std::vector<CoefficientNet> scaled;
  for (const CoefficientNet& f : corpus) scaled.push_back(3.0 * f);

  const auto base = verify_hl_torus(zn, corpus, 1.5, {});
  const auto big = verify_hl_torus(zn, scaled, 1.5, {});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(big.per_function[i].ratio ==
          doctest::Approx(base.per_function[i].ratio).epsilon(1e-12));
  }

  const auto ned_base = verify_ned_torus(zn, corpus, 1.5, 1.5, {});
  const auto ned_big = verify_ned_torus(zn, scaled, 1.5, 1.5, {});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(ned_big.per_function[i].ratio ==
          doctest::Approx(ned_base.per_function[i].ratio).epsilon(1e-12));
  }
}

TEST_CASE("ned-torus campaign and the three-norm chain") {
  const Lattice zn = make_integer_lattice(1, 5);  // 11 modes
  const CorpusSpec spec = CorpusSpec::parse("random:8:seed=21");
  const std::vector<CoefficientNet> corpus = torus_corpus(zn, spec);

  const double p = 1.5;
  const auto rep = verify_ned_torus(zn, corpus, p, p, {.grid_m = 512});
  CHECK(rep.per_function.size() == corpus.size());
  CHECK(rep.empirical_constant > 0.0);
  for (const auto& r : rep.per_function) CHECK(r.exact_engine);

  // chain: N(M0) <= N(M1) <= C * ell^{p',p} per function, exact engine
  const SubsetFamily progs = SubsetFamily::progressions(zn);
  const SubsetFamily all = SubsetFamily::all_subsets(zn);
  const double p_prime = 3.0;
  for (const CoefficientNet& f : corpus) {
    const double m0 = net_norm(f, progs, {p_prime, p}).value;
    const double m1 = net_norm(f, all, {p_prime, p}).value;
    const double lorentz = lorentz_discrete_norm(f, p_prime, p);
    CHECK(m0 <= m1);
    CHECK(m1 <= 10.0 * lorentz);  // bounded comparison, constant not sharp
  }
}

TEST_CASE("ned-torus on dirichlet kernels") {
  const Lattice zn = make_integer_lattice(1, 8);
  std::vector<CoefficientNet> kernels;
  for (int n : {2, 4, 8}) {
    CoefficientNet f(zn);
    for (int m = -n; m <= n; ++m) {
      f.matrix(zn.find_label("m=" + std::to_string(m)))(0, 0) = 1.0;
    }
    kernels.push_back(std::move(f));
  }
  const auto rep = verify_ned_torus(zn, kernels, 2.0, 2.0, {.grid_m = 512});
  for (const auto& r : rep.per_function) {
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio <= rep.empirical_constant + 1e-15);
  }
}

TEST_CASE("su2 converse: explicit formula") {
  // f = chi_0: segment sums are all 1, inner sup at each xi is (2k+1)^-3
  // maximized at the smallest admissible k
  std::vector<std::complex<double>> traces{1.0};
  CHECK(su2_converse_lhs(traces, 1.5) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(su2_converse_lhs({}, 1.5) == 0.0);
  CHECK(su2_converse_lhs({0.0, 0.0}, 1.5) == 0.0);
  CHECK_THROWS_AS(su2_converse_lhs(traces, 3.0), std::domain_error);

  // three-level worked example: c = (1, 0, 0) on l = 0, 1/2, 1
  std::vector<std::complex<double>> c{1.0, 0.0, 0.0};
  const double expected =
      1.0 + std::pow(2.0, 2.0) / 64.0 + std::pow(3.0, 2.0) / 729.0;
  CHECK(su2_converse_lhs(c, 2.0) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("su2 converse campaign cross-checks and reports") {
  const Lattice dual = make_su2_dual(3.0);
  const CorpusSpec spec = CorpusSpec::parse("random:6:seed=19");
  const auto corpus = su2_corpus(static_cast<int>(dual.size()) - 1, spec);
  const auto rep = verify_su2_converse(dual, corpus, 1.5, {});
  CHECK(rep.per_function.size() == corpus.size());
  for (const auto& r : rep.per_function) {
    CHECK(std::isfinite(r.ratio));
    CHECK(r.lhs >= 0.0);
    CHECK(r.rhs > 0.0);
  }

  {  // constant function on the trivial truncation: lhs = rhs = 1
    SU2ClassFunction one(0);
    one.coeff(0) = 1.0;
    const auto unit = verify_su2_converse(make_su2_dual(0.0), {one}, 1.5, {});
    CHECK(unit.per_function[0].ratio == doctest::Approx(1.0).epsilon(1e-9));

    // on a longer truncation the sup at xi > 0 is the segment ending at
    // xi itself, adding sum over u >= 2 of u^(3p-4) u^(-3p) = u^-4
    const auto longer =
        verify_su2_converse(make_su2_dual(2.0), {one}, 1.5, {});
    double expected = 0.0;
    for (int u = 1; u <= 5; ++u) expected += std::pow(u, -4.0);
    CHECK(longer.per_function[0].lhs ==
          doctest::Approx(expected).epsilon(1e-9));
  }
  {  // zero function
    const SU2ClassFunction zero(2);
    const auto z = verify_su2_converse(make_su2_dual(1.0), {zero}, 1.5, {});
    CHECK(z.per_function[0].lhs == 0.0);
  }
}

TEST_CASE("embedding campaign") {
  const Lattice dual = make_su2_dual(3.0);
  const SubsetFamily segs = SubsetFamily::segments(dual);

  {  // q1 = q2 gives ratio exactly one
    const auto rep = verify_embedding(dual, segs, 2.0, 2.0, 2.0, 5, 3, {});
    for (const auto& r : rep.per_function) {
      CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  {  // single-element lattice: both norms proportional to |Tr F|
    const Lattice point = make_su2_dual(0.0);
    const SubsetFamily fam = SubsetFamily::all_subsets(point);
    const auto rep = verify_embedding(point, fam, 2.0, 1.0, kInf, 5, 3, {});
    for (const auto& r : rep.per_function) {
      CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
  {
    const auto rep = verify_embedding(dual, segs, 2.0, 2.0, kInf, 20, 7, {});
    CHECK(rep.empirical_constant > 0.0);
    CHECK(rep.empirical_constant <= 10.0);
  }
}

TEST_CASE("k-functional upper bound holds on random decompositions") {
  const Lattice lat = make_integer_segment(1, 8);
  const auto rep = verify_kfunc_upper(lat, 1.5, 3.0, 300, 13, {});
  CHECK(rep.violations.empty());
  CHECK(rep.per_function.size() == 300);

  // trivial decomposition F2 = 0: the bound reduces to a restricted sup
  const SubsetFamily fam = SubsetFamily::all_subsets(lat);
  std::mt19937_64 rng(5);
  const CoefficientNet f = oracle::random_matrix_net(lat, rng);
  const CoefficientNet zero(lat);
  const double full =
      net_norm(f, fam, {1.5, kInf}).value;
  const AveragingTable table =
      averaging_table(f, fam, lat.distinct_lambdas(), Engine::Exact);
  for (double t : {0.1, 1.0, 10.0}) {
    const double v = std::pow(t, 1.0 / (1.0 / 1.5 - 1.0 / 3.0));
    double lhs = 0.0;
    for (const AveragingEntry& e : table.entries) {
      if (e.level <= v) {
        lhs = std::max(lhs, std::pow(e.level, 1.0 / 1.5) * e.value);
      }
    }
    CHECK(lhs <= full * (1.0 + 1e-14) +
                     t * net_norm(zero, fam, {3.0, kInf}).value);
  }
}

TEST_CASE("reports are deterministic and carry the schema tag") {
  const Lattice dual = make_su2_dual(2.0);
  const CorpusSpec spec = CorpusSpec::parse("random:4:seed=2");
  const auto corpus = su2_corpus(static_cast<int>(dual.size()) - 1, spec);

  auto first = verify_su2_converse(dual, corpus, 1.5, {.threads = 1});
  auto second = verify_su2_converse(dual, corpus, 1.5, {.threads = 4});
  first.corpus = second.corpus = spec.describe();

  const std::string a = first.to_json().dump(2);
  const std::string b = second.to_json().dump(2);
  CHECK(a == b);
  CHECK(first.to_csv() == second.to_csv());
  CHECK(a.find("netspace-report/1") != std::string::npos);

  // CSV quoting: labels with commas get wrapped and doubled
  VerificationReport rep;
  rep.per_function.push_back({"weird,\"label\"", 1.0, 2.0, 0.5, true});
  const std::string csv = rep.to_csv();
  CHECK(csv.find("\"weird,\"\"label\"\"\"") != std::string::npos);
}

TEST_CASE("parallel_for covers every index once and rethrows") {
  std::vector<int> hits(101, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);

  CHECK_THROWS_AS(
      parallel_for(8, 3,
                   [](std::size_t i) {
                     if (i == 5) throw std::runtime_error("boom");
                   }),
      std::runtime_error);
}
