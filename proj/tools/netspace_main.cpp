#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netspace/dirichlet.hpp"
#include "netspace/harness.hpp"

namespace {

using nlohmann::json;
using namespace netspace;

struct LatticeArgs {
  std::string kind = "su2";
  double lmax = 5.0;
  int n = 1;
  int radius = 8;
  std::string lambda_rule = "rank";
  std::string file;
};

void add_lattice_options(CLI::App* cmd, LatticeArgs& args) {
  cmd->add_option("--kind", args.kind, "Lattice kind: su2, zn, or file")
      ->capture_default_str();
  cmd->add_option("--lmax", args.lmax, "SU(2) truncation l_max (half-integer)")
      ->capture_default_str();
  cmd->add_option("--n", args.n, "Integer-lattice dimension")
      ->capture_default_str();
  cmd->add_option("--radius", args.radius, "Integer-lattice sup-norm radius")
      ->capture_default_str();
  cmd->add_option("--lambda-rule", args.lambda_rule,
                  "Integer-lattice lambda rule: rank or paper-m")
      ->capture_default_str();
  cmd->add_option("--lattice", args.file, "Generic lattice JSON file");
}

Lattice build_lattice(const LatticeArgs& args) {
  if (!args.file.empty() || args.kind == "file") {
    if (args.file.empty()) {
      throw std::invalid_argument("--kind file requires --lattice <path>");
    }
    std::ifstream in(args.file);
    if (!in) throw std::invalid_argument("cannot open lattice file " + args.file);
    json j;
    in >> j;
    return lattice_from_json(j);
  }
  if (args.kind == "su2") return make_su2_dual(args.lmax);
  if (args.kind == "zn") {
    const IntegerLambdaRule rule = args.lambda_rule == "paper-m"
                                       ? IntegerLambdaRule::PaperM
                                       : IntegerLambdaRule::Rank;
    if (args.lambda_rule != "rank" && args.lambda_rule != "paper-m") {
      throw std::invalid_argument("unknown lambda rule " + args.lambda_rule);
    }
    return make_integer_lattice(args.n, args.radius, rule);
  }
  throw std::invalid_argument("unknown lattice kind " + args.kind);
}

SubsetFamily build_family(const Lattice& lat, const std::string& name,
                          const std::string& family_file) {
  if (name == "all-subsets") return SubsetFamily::all_subsets(lat);
  if (name == "progressions" || name == "arithmetic-progressions") {
    return SubsetFamily::progressions(lat);
  }
  if (name == "segments") return SubsetFamily::segments(lat);
  if (name == "file") {
    std::ifstream in(family_file);
    if (!in) {
      throw std::invalid_argument("cannot open family file " + family_file);
    }
    json j;
    in >> j;
    return SubsetFamily::explicit_from_json(lat, j);
  }
  throw std::invalid_argument("unknown family " + name);
}

Engine parse_engine(const std::string& name) {
  if (name == "exact") return Engine::Exact;
  if (name == "heuristic") return Engine::Heuristic;
  if (name == "auto") return Engine::Auto;
  throw std::invalid_argument("unknown engine " + name);
}

double parse_q(const std::string& text) {
  if (text == "inf" || text == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  return std::stod(text);
}

json subset_labels(const Lattice& lat, const Subset& q) {
  json out = json::array();
  for (ElementId id : q) out.push_back(lat.element(id).label);
  return out;
}

int resolve_threads(int threads_flag) {
  if (threads_flag > 0) return threads_flag;
  if (const char* env = std::getenv("NETSPACE_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 1;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"net-space norms, Dirichlet characterization constants, and "
               "Hardy-Littlewood verification campaigns"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file (CLI flags win)");
  app.option_defaults()->always_capture_default();

  int threads_flag = 0;
  app.add_option("--threads", threads_flag,
                 "Worker threads (fallback: NETSPACE_THREADS, default 1)");

  // ---- validate-lattice ----------------------------------------------
  auto* validate = app.add_subcommand(
      "validate-lattice", "Growth-law and Weyl-count validators");
  LatticeArgs vl_lat;
  add_lattice_options(validate, vl_lat);
  double vl_beta = 0.0;
  std::string vl_side = "auto";
  std::string vl_out;
  validate->add_option("--beta", vl_beta, "Growth-law exponent (not -1)");
  validate->add_option("--side", vl_side, "below, above, or auto from beta");
  validate->add_option("--out", vl_out, "Write report JSON here (else stdout)");

  // ---- netnorm ---------------------------------------------------------
  auto* netnorm_cmd =
      app.add_subcommand("netnorm", "Compute a net norm N_{p,q}(Gamma, M)");
  LatticeArgs nn_lat;
  add_lattice_options(netnorm_cmd, nn_lat);
  std::string nn_family = "all-subsets", nn_family_file, nn_net_file,
              nn_q = "inf", nn_engine = "auto", nn_out;
  double nn_p = 2.0;
  std::uint64_t nn_seed = 0;
  netnorm_cmd->add_option("--family", nn_family,
                          "all-subsets, progressions, segments, or file");
  netnorm_cmd->add_option("--family-file", nn_family_file,
                          "JSON for --family file");
  netnorm_cmd->add_option("--net", nn_net_file,
                          "Coefficient net JSON (label -> [[re,im],...])");
  netnorm_cmd->add_option("--random-net-seed", nn_seed,
                          "Use a seeded random net instead of --net");
  netnorm_cmd->add_option("--p", nn_p, "First index p");
  netnorm_cmd->add_option("--q", nn_q, "Second index q (number or inf)");
  netnorm_cmd->add_option("--engine", nn_engine, "exact, heuristic, or auto");
  netnorm_cmd->add_option("--out", nn_out, "Write result JSON here");

  // ---- averaging-table -------------------------------------------------
  auto* avg_cmd = app.add_subcommand(
      "averaging-table", "Averaging function per lambda level");
  LatticeArgs avg_lat;
  add_lattice_options(avg_cmd, avg_lat);
  std::string avg_family = "all-subsets", avg_family_file, avg_net_file,
              avg_engine = "auto", avg_out;
  std::uint64_t avg_seed = 0;
  avg_cmd->add_option("--family", avg_family,
                      "all-subsets, progressions, segments, or file");
  avg_cmd->add_option("--family-file", avg_family_file, "JSON for family");
  avg_cmd->add_option("--net", avg_net_file, "Coefficient net JSON");
  avg_cmd->add_option("--random-net-seed", avg_seed, "Seeded random net");
  avg_cmd->add_option("--engine", avg_engine, "exact, heuristic, or auto");
  avg_cmd->add_option("--out", avg_out, "Write table JSON here");

  // ---- dirichlet ---------------------------------------------------------
  auto* dir_cmd = app.add_subcommand(
      "dirichlet", "Dirichlet-kernel norms and rearrangement bounds");
  std::string dir_frontend = "torus";
  std::string dir_modes, dir_two_l, dir_progression, dir_out;
  double dir_p_prime = 2.0, dir_rearrange_p = 0.0;
  int dir_grid = 4096, dir_quad = 0, dir_radius = 16;
  double dir_lmax = 5.0;
  dir_cmd->add_option("--frontend", dir_frontend, "torus or su2");
  dir_cmd->add_option("--radius", dir_radius, "Torus lattice radius");
  dir_cmd->add_option("--lmax", dir_lmax, "SU(2) truncation");
  dir_cmd->add_option("--modes", dir_modes,
                      "Torus spectrum, comma-separated integers");
  dir_cmd->add_option("--two-l", dir_two_l,
                      "SU(2) spectrum, comma-separated 2l values");
  dir_cmd->add_option("--progression", dir_progression,
                      "Torus progression start:step:length");
  dir_cmd->add_option("--p-prime", dir_p_prime, "Norm exponent (or inf via 0)");
  dir_cmd->add_option("--grid", dir_grid, "Torus grid size");
  dir_cmd->add_option("--quad-nodes", dir_quad, "SU(2) quadrature nodes");
  dir_cmd->add_option("--rearrangement-p", dir_rearrange_p,
                      "Also run the rearrangement bound check at this p");
  dir_cmd->add_option("--out", dir_out, "Write result JSON here");

  // ---- characterize ------------------------------------------------------
  auto* char_cmd = app.add_subcommand(
      "characterize", "Characterization constant C_{pM} with witnesses");
  LatticeArgs ch_lat;
  add_lattice_options(char_cmd, ch_lat);
  std::string ch_family = "all-subsets", ch_family_file, ch_frontend = "su2",
              ch_out, ch_csv;
  double ch_p = 2.0;
  int ch_grid = 4096, ch_quad = 0;
  char_cmd->add_option("--family", ch_family, "Family of subsets");
  char_cmd->add_option("--family-file", ch_family_file, "JSON for family");
  char_cmd->add_option("--frontend", ch_frontend, "torus or su2");
  char_cmd->add_option("--p", ch_p, "Exponent p in (1, inf]");
  char_cmd->add_option("--grid", ch_grid, "Torus grid size");
  char_cmd->add_option("--quad-nodes", ch_quad, "SU(2) quadrature nodes");
  char_cmd->add_option("--out", ch_out, "Write result JSON here");
  char_cmd->add_option("--csv", ch_csv, "Write per-pi witness table CSV here");

  // ---- verify -------------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "Run an inequality verification campaign");
  std::string vf_inequality = "hl-torus", vf_corpus = "random:50:seed=1",
              vf_q = "2", vf_q2 = "inf", vf_family = "segments", vf_out,
              vf_engine = "auto";
  double vf_p = 1.5, vf_q1 = 2.0, vf_p1 = 1.5, vf_p2 = 3.0, vf_lmax = 10.0;
  int vf_bandwidth = 16, vf_grid = 256, vf_trials = 1000, vf_size = 50;
  std::uint64_t vf_seed = 1;
  verify_cmd->add_option("--inequality", vf_inequality,
                         "hl-torus, ned-torus, su2-converse, embedding, or "
                         "kfunc-upper");
  verify_cmd->add_option("--p", vf_p, "Lebesgue exponent p");
  verify_cmd->add_option("--q", vf_q, "Lorentz index q (number or inf)");
  verify_cmd->add_option("--corpus", vf_corpus,
                         "deterministic or random:<n>:seed=<s>[:decay=<d>]");
  verify_cmd->add_option("--bandwidth", vf_bandwidth, "Torus mode cutoff");
  verify_cmd->add_option("--lmax", vf_lmax, "SU(2) truncation l_max");
  verify_cmd->add_option("--grid", vf_grid, "Torus grid size");
  verify_cmd->add_option("--family", vf_family, "Family for embedding runs");
  verify_cmd->add_option("--q1", vf_q1, "Embedding q1");
  verify_cmd->add_option("--q2", vf_q2, "Embedding q2 (number or inf)");
  verify_cmd->add_option("--p1", vf_p1, "K-functional p1");
  verify_cmd->add_option("--p2", vf_p2, "K-functional p2");
  verify_cmd->add_option("--trials", vf_trials, "K-functional trials");
  verify_cmd->add_option("--size", vf_size, "Embedding corpus size");
  verify_cmd->add_option("--seed", vf_seed, "Seed for embedding/kfunc");
  verify_cmd->add_option("--engine", vf_engine, "exact, heuristic, or auto");
  verify_cmd->add_option("--out", vf_out, "Directory for report.json/csv");

  // app-level flags (--threads, --config) may appear after the subcommand
  for (CLI::App* sub :
       {validate, netnorm_cmd, avg_cmd, dir_cmd, char_cmd, verify_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  const int threads = resolve_threads(threads_flag);

  try {
    if (*validate) {
      const Lattice lat = build_lattice(vl_lat);
      TailSide side;
      if (vl_side == "auto") {
        side = vl_beta > -1.0 ? TailSide::Below : TailSide::Above;
      } else if (vl_side == "below") {
        side = TailSide::Below;
      } else if (vl_side == "above") {
        side = TailSide::Above;
      } else {
        throw std::invalid_argument("unknown side " + vl_side);
      }
      const Assumption3Report rep = check_assumption3(lat, vl_beta, side);
      json j;
      j["beta"] = rep.beta;
      j["side"] = rep.side == TailSide::Below ? "below" : "above";
      j["interior"] = {{"begin", rep.interior_begin},
                       {"end", rep.interior_end}};
      j["min_ratio"] = rep.min_ratio;
      j["max_ratio"] = rep.max_ratio;
      j["median_ratio"] = rep.median_ratio;
      j["band_spread"] =
          rep.min_ratio > 0.0 ? rep.max_ratio / rep.min_ratio : 0.0;
      if (lat.kind() == LatticeKind::Su2Dual) {
        const WeylCountReport weyl = weyl_count_check(lat);
        j["weyl"] = {{"full_min", weyl.full_min},
                     {"full_max", weyl.full_max},
                     {"interior_min", weyl.interior_min},
                     {"interior_max", weyl.interior_max},
                     {"eigenvalues", weyl.eigenvalue_count}};
      }
      emit(j, vl_out);
      return 0;
    }

    if (*netnorm_cmd || *avg_cmd) {
      const bool is_norm = static_cast<bool>(*netnorm_cmd);
      const LatticeArgs& largs = is_norm ? nn_lat : avg_lat;
      const std::string& fam_name = is_norm ? nn_family : avg_family;
      const std::string& fam_file = is_norm ? nn_family_file : avg_family_file;
      const std::string& net_file = is_norm ? nn_net_file : avg_net_file;
      const std::uint64_t seed = is_norm ? nn_seed : avg_seed;
      const Engine engine = parse_engine(is_norm ? nn_engine : avg_engine);
      const std::string& out = is_norm ? nn_out : avg_out;

      const Lattice lat = build_lattice(largs);
      if (engine == Engine::Exact && fam_name == "all-subsets" &&
          lat.size() > FamilyCaps{}.all_subsets_hard_cap) {
        throw std::invalid_argument(
            "exact engine capped at " +
            std::to_string(FamilyCaps{}.all_subsets_hard_cap) +
            " elements (lattice has " + std::to_string(lat.size()) +
            "); use heuristic engine");
      }
      const SubsetFamily fam = build_family(lat, fam_name, fam_file);

      std::optional<CoefficientNet> net;
      if (!net_file.empty()) {
        std::ifstream in(net_file);
        if (!in) {
          throw std::invalid_argument("cannot open net file " + net_file);
        }
        json j;
        in >> j;
        net = CoefficientNet::from_json(lat, j);
      } else if (seed != 0) {
        std::mt19937_64 rng(seed);
        net = random_net(lat, rng);
      } else {
        throw std::invalid_argument("provide --net or --random-net-seed");
      }

      if (is_norm) {
        const NormParams params{nn_p, parse_q(nn_q)};
        const NetNormResult result = net_norm(*net, fam, params, engine);
        json j;
        j["value"] = result.value;
        j["exact"] = result.exact;
        j["p"] = params.p;
        j["q"] = std::isinf(params.q) ? json("inf") : json(params.q);
        j["family"] = fam.describe();
        json table = json::array();
        for (const AveragingEntry& e : result.table.entries) {
          table.push_back({{"level", e.level},
                           {"value", e.value},
                           {"lower_bound_only", e.lower_bound_only},
                           {"witness", subset_labels(lat, e.witness)}});
        }
        j["averaging_table"] = std::move(table);
        emit(j, out);
      } else {
        const AveragingTable table =
            averaging_table(*net, fam, lat.distinct_lambdas(), engine);
        json rows = json::array();
        for (const AveragingEntry& e : table.entries) {
          rows.push_back({{"level", e.level},
                          {"value", e.value},
                          {"lower_bound_only", e.lower_bound_only},
                          {"witness", subset_labels(lat, e.witness)}});
        }
        json j;
        j["exact"] = table.exact;
        j["family"] = fam.describe();
        j["entries"] = std::move(rows);
        j["monotonicity_violations"] = table.monotonicity_violations();
        emit(j, out);
      }
      return 0;
    }

    if (*dir_cmd) {
      json j;
      if (!dir_progression.empty() || dir_rearrange_p > 0.0) {
        int start = 0, step = 1, length = 1;
        if (!dir_progression.empty()) {
          std::stringstream ss(dir_progression);
          std::string part;
          std::vector<int> vals;
          while (std::getline(ss, part, ':')) vals.push_back(std::stoi(part));
          if (vals.size() != 3) {
            throw std::invalid_argument(
                "--progression expects start:step:length");
          }
          start = vals[0];
          step = vals[1];
          length = vals[2];
        }
        if (dir_rearrange_p > 0.0) {
          const RearrangementBoundReport rb = rearrangement_bound_check(
              start, step, length, dir_rearrange_p, dir_grid);
          j["rearrangement"] = {{"constant", rb.constant},
                                {"achieved_at_t", rb.achieved_at_t},
                                {"grid", rb.grid_m},
                                {"length", rb.length},
                                {"p", dir_rearrange_p}};
        }
        if (!dir_progression.empty() && dir_frontend == "torus") {
          const int radius =
              std::max(std::abs(start),
                       std::abs(start + (length - 1) * step));
          const Lattice zn = make_integer_lattice(1, radius);
          Subset q;
          for (int k = 0; k < length; ++k) {
            const int mode = start + k * step;
            q.push_back(zn.find_label("m=" + std::to_string(mode)));
          }
          std::sort(q.begin(), q.end());
          DirichletOptions opts;
          opts.grid_m = dir_grid;
          const double pp = dir_p_prime == 0.0
                                ? std::numeric_limits<double>::infinity()
                                : dir_p_prime;
          const DirichletNorm norm = dirichlet_norm(zn, q, pp, Frontend::Torus,
                                                    opts);
          j["norm"] = {{"value", norm.value},
                       {"uncertainty", norm.uncertainty},
                       {"p_prime", dir_p_prime},
                       {"nu", static_cast<double>(length)}};
        }
        emit(j, dir_out);
        return 0;
      }

      DirichletOptions opts;
      opts.grid_m = dir_grid;
      opts.quad_nodes = dir_quad;
      const double pp = dir_p_prime == 0.0
                            ? std::numeric_limits<double>::infinity()
                            : dir_p_prime;
      if (dir_frontend == "torus") {
        const Lattice zn = make_integer_lattice(1, dir_radius);
        Subset q;
        std::stringstream ss(dir_modes);
        std::string part;
        while (std::getline(ss, part, ',')) {
          const ElementId id = zn.find_label("m=" + part);
          if (id < 0) throw std::domain_error("mode outside radius: " + part);
          q.push_back(id);
        }
        std::sort(q.begin(), q.end());
        const DirichletNorm norm =
            dirichlet_norm(zn, q, pp, Frontend::Torus, opts);
        j = {{"value", norm.value},
             {"uncertainty", norm.uncertainty},
             {"nu", nu_measure(zn, q)}};
      } else if (dir_frontend == "su2") {
        const Lattice dual = make_su2_dual(dir_lmax);
        Subset q;
        std::stringstream ss(dir_two_l);
        std::string part;
        while (std::getline(ss, part, ',')) {
          const int t = std::stoi(part);
          if (t < 0 || t >= static_cast<int>(dual.size())) {
            throw std::domain_error("2l outside truncation: " + part);
          }
          q.push_back(static_cast<ElementId>(t));
        }
        std::sort(q.begin(), q.end());
        const DirichletNorm norm =
            dirichlet_norm(dual, q, pp, Frontend::Su2, opts);
        j = {{"value", norm.value},
             {"uncertainty", norm.uncertainty},
             {"nu", nu_measure(dual, q)}};
      } else {
        throw std::invalid_argument("unknown frontend " + dir_frontend);
      }
      emit(j, dir_out);
      return 0;
    }

    if (*char_cmd) {
      const Lattice lat = build_lattice(ch_lat);
      const SubsetFamily fam = build_family(lat, ch_family, ch_family_file);
      const Frontend frontend =
          ch_frontend == "torus" ? Frontend::Torus : Frontend::Su2;
      DirichletOptions opts;
      opts.grid_m = ch_grid;
      opts.quad_nodes = ch_quad;
      const CharacterizationResult result =
          characterization_constant(lat, fam, ch_p, frontend, opts);
      json j;
      j["constant"] = result.constant;
      j["p"] = ch_p;
      j["family"] = fam.describe();
      if (result.witness_pi >= 0) {
        j["witness"] = {{"pi", lat.element(result.witness_pi).label},
                        {"Q", subset_labels(lat, result.witness_q)},
                        {"nu_Q", result.witness_nu},
                        {"DQ_norm", result.witness_norm}};
      }
      emit(j, ch_out);
      if (!ch_csv.empty()) {
        std::ofstream csv(ch_csv, std::ios::binary);
        csv << "pi_label,Q_encoding,nu_Q,DQ_norm,ratio\r\n";
        for (const CharacterizationRow& row : result.rows) {
          if (!row.feasible) continue;
          std::string enc;
          for (ElementId id : row.q) {
            if (!enc.empty()) enc += ';';
            enc += lat.element(id).label;
          }
          char buf[160];
          std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.17g\r\n", row.nu_q,
                        row.dq_norm, row.ratio);
          csv << "\"" << row.pi_label << "\",\"" << enc << "\"" << buf;
        }
      }
      return 0;
    }

    if (*verify_cmd) {
      HarnessOptions opts;
      opts.threads = threads;
      opts.engine = parse_engine(vf_engine);
      opts.grid_m = vf_grid;
      const CorpusSpec corpus = CorpusSpec::parse(vf_corpus);

      VerificationReport report;
      if (vf_inequality == "hl-torus") {
        const Lattice zn = make_integer_lattice(1, vf_bandwidth);
        report = verify_hl_torus(zn, torus_corpus(zn, corpus), vf_p, opts);
        report.config["bandwidth"] = vf_bandwidth;
      } else if (vf_inequality == "ned-torus") {
        const Lattice zn = make_integer_lattice(1, vf_bandwidth);
        report = verify_ned_torus(zn, torus_corpus(zn, corpus), vf_p,
                                  parse_q(vf_q), opts);
        report.config["bandwidth"] = vf_bandwidth;
      } else if (vf_inequality == "su2-converse") {
        const Lattice dual = make_su2_dual(vf_lmax);
        const int two_l_max = static_cast<int>(dual.size()) - 1;
        report = verify_su2_converse(dual, su2_corpus(two_l_max, corpus),
                                     vf_p, opts);
        report.config["lmax"] = vf_lmax;
      } else if (vf_inequality == "embedding") {
        LatticeArgs largs;
        largs.kind = "su2";
        largs.lmax = vf_lmax;
        const Lattice lat = build_lattice(largs);
        const SubsetFamily fam = build_family(lat, vf_family, "");
        report = verify_embedding(lat, fam, vf_p, vf_q1, parse_q(vf_q2),
                                  vf_size, vf_seed, opts);
      } else if (vf_inequality == "kfunc-upper") {
        const Lattice lat = make_integer_lattice(
            1, std::max(1, (vf_bandwidth - 1) / 2));
        report = verify_kfunc_upper(lat, vf_p1, vf_p2, vf_trials, vf_seed,
                                    opts);
      } else {
        throw std::invalid_argument("unknown inequality " + vf_inequality);
      }
      report.corpus = corpus.describe();

      std::cout << "inequality=" << report.inequality_id
                << " functions=" << report.per_function.size()
                << " empirical_constant=" << report.empirical_constant
                << " violations=" << report.violations.size()
                << " heuristic=" << (report.heuristic_used ? "yes" : "no")
                << " runtime_s=" << report.runtime_seconds << "\n";
      if (!vf_out.empty()) {
        write_report_files(report, vf_out);
      } else {
        std::cout << report.to_json().dump(2) << "\n";
      }
      return report.violations.empty() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
