#include "netspace/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "netspace/summation.hpp"

namespace netspace {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

double finalize(VerificationReport& rep, const Stopwatch& watch) {
  double best = 0.0;
  for (const FunctionResult& r : rep.per_function) {
    best = std::max(best, r.ratio);
    if (!r.exact_engine) rep.heuristic_used = true;
  }
  rep.empirical_constant = best;
  rep.runtime_seconds = watch.seconds();
  return best;
}

double conjugate_exponent(double p) { return p / (p - 1.0); }

}  // namespace

CorpusSpec CorpusSpec::parse(const std::string& text) {
  CorpusSpec spec;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.empty()) throw std::invalid_argument("empty corpus spec");

  if (parts[0] == "deterministic") {
    spec.kind = Kind::Deterministic;
    if (parts.size() > 1) {
      throw std::invalid_argument("deterministic corpus takes no arguments");
    }
    return spec;
  }
  if (parts[0] != "random") {
    throw std::invalid_argument("corpus spec must start with 'random' or "
                                "'deterministic': " + text);
  }
  spec.kind = Kind::Random;
  if (parts.size() < 2) {
    throw std::invalid_argument("random corpus needs a size: " + text);
  }
  spec.size = std::stoi(parts[1]);
  if (spec.size < 1) throw std::invalid_argument("corpus size must be >= 1");
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("bad corpus option: " + parts[i]);
    }
    const std::string key = parts[i].substr(0, eq);
    const std::string val = parts[i].substr(eq + 1);
    if (key == "seed") {
      spec.seed = std::stoull(val);
    } else if (key == "decay") {
      spec.decay = std::stoi(val);
    } else {
      throw std::invalid_argument("unknown corpus option: " + key);
    }
  }
  return spec;
}

std::string CorpusSpec::describe() const {
  if (kind == Kind::Deterministic) return "deterministic";
  std::ostringstream os;
  os << "random:" << size << ":seed=" << seed << ":decay=" << decay;
  return os.str();
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "netspace-report/1";
  j["inequality"] = inequality_id;
  j["corpus"] = corpus;
  j["config"] = config;
  j["empirical_constant"] = empirical_constant;
  j["heuristic_used"] = heuristic_used;
  j["violations"] = violations;
  j["violation_count"] = violations.size();
  nlohmann::json rows = nlohmann::json::array();
  for (const FunctionResult& r : per_function) {
    nlohmann::json row;
    row["label"] = r.label;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["ratio"] = r.ratio;
    row["exact_engine"] = r.exact_engine;
    rows.push_back(std::move(row));
  }
  j["per_function"] = std::move(rows);
  return j;
}

std::string VerificationReport::to_csv() const {
  std::string out = "label,lhs,rhs,ratio,exact_engine\r\n";
  for (const FunctionResult& r : per_function) {
    out += csv_quote(r.label);
    out += ',';
    out += format_double(r.lhs);
    out += ',';
    out += format_double(r.rhs);
    out += ',';
    out += format_double(r.ratio);
    out += ',';
    out += r.exact_engine ? "true" : "false";
    out += "\r\n";
  }
  return out;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < count;
             i += static_cast<std::size_t>(workers)) {
          fn(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

CoefficientNet random_net(const Lattice& lat, std::mt19937_64& rng,
                          int decay) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CoefficientNet net(lat);
  for (const LatticeElement& e : lat.elements()) {
    const double scale =
        std::pow(1.0 + static_cast<double>(e.id), -static_cast<double>(decay));
    Eigen::MatrixXcd& m = net.matrix(e.id);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        m(r, c) = std::complex<double>{gauss(rng), gauss(rng)} * scale;
      }
    }
  }
  return net;
}

std::vector<CoefficientNet> torus_corpus(const Lattice& zn,
                                         const CorpusSpec& spec) {
  std::vector<CoefficientNet> corpus;
  const auto& coords = zn.coordinates();
  auto mode_id = [&](int m) -> ElementId {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].size() == 1 && coords[i][0] == m) {
        return static_cast<ElementId>(i);
      }
    }
    return -1;
  };

  if (spec.kind == CorpusSpec::Kind::Deterministic) {
    int bandwidth = 0;
    for (const auto& m : coords) bandwidth = std::max(bandwidth, std::abs(m[0]));

    {  // constant
      CoefficientNet f(zn);
      f.matrix(mode_id(0))(0, 0) = 1.0;
      corpus.push_back(std::move(f));
    }
    for (int m : {1, bandwidth}) {  // pure modes
      const ElementId id = mode_id(m);
      if (id < 0) continue;
      CoefficientNet f(zn);
      f.matrix(id)(0, 0) = 1.0;
      corpus.push_back(std::move(f));
    }
    for (int n = 1; n <= bandwidth; n *= 2) {  // Dirichlet kernels
      CoefficientNet f(zn);
      for (int m = -n; m <= n; ++m) f.matrix(mode_id(m))(0, 0) = 1.0;
      corpus.push_back(std::move(f));
    }
    for (int n = 1; n <= bandwidth; n *= 2) {  // Fejer kernels
      CoefficientNet f(zn);
      for (int m = -n; m <= n; ++m) {
        f.matrix(mode_id(m))(0, 0) =
            1.0 - std::abs(m) / (static_cast<double>(n) + 1.0);
      }
      corpus.push_back(std::move(f));
    }
    {  // alternating signs probe oscillation
      CoefficientNet f(zn);
      for (const LatticeElement& e : zn.elements()) {
        const int m = coords[static_cast<std::size_t>(e.id)][0];
        f.matrix(e.id)(0, 0) = (m % 2 == 0) ? 1.0 : -1.0;
      }
      corpus.push_back(std::move(f));
    }
    return corpus;
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < spec.size; ++i) {
    CoefficientNet f(zn);
    for (const LatticeElement& e : zn.elements()) {
      double norm2 = 0.0;
      for (int c : coords[static_cast<std::size_t>(e.id)]) {
        norm2 += static_cast<double>(c) * c;
      }
      const double scale =
          std::pow(1.0 + std::sqrt(norm2), -static_cast<double>(spec.decay));
      f.matrix(e.id)(0, 0) = std::complex<double>{gauss(rng), gauss(rng)} * scale;
    }
    corpus.push_back(std::move(f));
  }
  return corpus;
}

std::vector<SU2ClassFunction> su2_corpus(int two_l_max,
                                         const CorpusSpec& spec) {
  std::vector<SU2ClassFunction> corpus;
  if (spec.kind == CorpusSpec::Kind::Deterministic) {
    {  // constant = chi_0
      SU2ClassFunction f(two_l_max);
      f.coeff(0) = 1.0;
      corpus.push_back(std::move(f));
    }
    for (int t : {1, two_l_max / 2, two_l_max}) {  // single characters
      if (t < 1 || t > two_l_max) continue;
      SU2ClassFunction f(two_l_max);
      f.coeff(t) = 1.0;
      corpus.push_back(std::move(f));
    }
    for (int top : {two_l_max / 2, two_l_max}) {  // Dirichlet kernels
      if (top < 1) continue;
      SU2ClassFunction f(two_l_max);
      for (int t = 0; t <= top; ++t) f.coeff(t) = static_cast<double>(t + 1);
      corpus.push_back(std::move(f));
    }
    {  // Fejer-style taper
      SU2ClassFunction f(two_l_max);
      for (int t = 0; t <= two_l_max; ++t) {
        f.coeff(t) = (1.0 - static_cast<double>(t) / (two_l_max + 1.0)) *
                     static_cast<double>(t + 1);
      }
      corpus.push_back(std::move(f));
    }
    return corpus;
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < spec.size; ++i) {
    SU2ClassFunction f(two_l_max);
    for (int t = 0; t <= two_l_max; ++t) {
      const double scale =
          std::pow(static_cast<double>(t + 1), -static_cast<double>(spec.decay));
      f.coeff(t) = std::complex<double>{gauss(rng), gauss(rng)} * scale;
    }
    corpus.push_back(std::move(f));
  }
  return corpus;
}

VerificationReport verify_hl_torus(const Lattice& zn,
                                   const std::vector<CoefficientNet>& corpus,
                                   double p, const HarnessOptions& opts) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw std::domain_error("verify_hl_torus requires 1 < p < inf");
  }
  Stopwatch watch;
  VerificationReport rep;
  rep.inequality_id = p <= 2.0 ? "hl-torus" : "hl-torus-dual";
  rep.config = {{"p", p}, {"grid_m", opts.grid_m}};

  int bandwidth = 0;
  for (const auto& m : zn.coordinates()) {
    for (int c : m) bandwidth = std::max(bandwidth, std::abs(c));
  }
  const int grid = std::max(opts.grid_m, 2 * bandwidth + 2);

  rep.per_function.resize(corpus.size());
  parallel_for(corpus.size(), opts.threads, [&](std::size_t i) {
    const CoefficientNet& coeffs = corpus[i];
    CompensatedSum coeff_side;
    for (const LatticeElement& e : zn.elements()) {
      double norm2 = 0.0;
      for (int c : zn.coordinates()[static_cast<std::size_t>(e.id)]) {
        norm2 += static_cast<double>(c) * c;
      }
      const double a = std::abs(coeffs.matrix(e.id)(0, 0));
      if (a == 0.0) continue;
      coeff_side +=
          std::pow(1.0 + std::sqrt(norm2), p - 2.0) * std::pow(a, p);
    }
    const TorusFunction f = torus_synthesize(coeffs, grid);
    const double function_side = std::pow(torus_lp_norm(f, p), p);

    FunctionResult r;
    r.label = "f" + std::to_string(i);
    if (p <= 2.0) {
      r.lhs = coeff_side.value();
      r.rhs = function_side;
    } else {
      r.lhs = function_side;
      r.rhs = coeff_side.value();
    }
    r.ratio = r.rhs == 0.0 ? 0.0 : r.lhs / r.rhs;
    rep.per_function[i] = std::move(r);
  });
  finalize(rep, watch);
  return rep;
}

VerificationReport verify_ned_torus(const Lattice& zn,
                                    const std::vector<CoefficientNet>& corpus,
                                    double p, double q,
                                    const HarnessOptions& opts) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw std::domain_error("verify_ned_torus requires 1 < p < inf");
  }
  Stopwatch watch;
  VerificationReport rep;
  rep.inequality_id = "ned-torus";
  rep.config = {{"p", p},
                {"q", std::isinf(q) ? nlohmann::json("inf") : nlohmann::json(q)},
                {"grid_m", opts.grid_m}};

  const SubsetFamily progressions = SubsetFamily::progressions(zn);
  int bandwidth = 0;
  for (const auto& m : zn.coordinates()) {
    for (int c : m) bandwidth = std::max(bandwidth, std::abs(c));
  }
  const int grid = std::max(opts.grid_m, 2 * bandwidth + 2);
  const double p_prime = conjugate_exponent(p);

  rep.per_function.resize(corpus.size());
  parallel_for(corpus.size(), opts.threads, [&](std::size_t i) {
    const CoefficientNet& coeffs = corpus[i];
    const NetNormResult lhs =
        net_norm(coeffs, progressions, {p_prime, q}, opts.engine);
    const TorusFunction f = torus_synthesize(coeffs, grid);
    const double rhs = torus_lorentz_norm(f, p, q);

    FunctionResult r;
    r.label = "f" + std::to_string(i);
    r.lhs = lhs.value;
    r.rhs = rhs;
    r.ratio = rhs == 0.0 ? 0.0 : lhs.value / rhs;
    r.exact_engine = lhs.exact;
    rep.per_function[i] = std::move(r);
  });
  finalize(rep, watch);
  return rep;
}

double su2_converse_lhs(const std::vector<std::complex<double>>& traces,
                        double p) {
  if (!(p > 1.0 && p <= 2.0)) {
    throw std::domain_error("su2 converse requires 1 < p <= 2");
  }
  const std::size_t n = traces.size();
  // segment sums S_k = sum over 2l+1 <= 2k+1 of (2l+1) Tr fhat(l)
  std::vector<double> seg_ratio(n);  // |S_k| / (2k+1)^3
  CompensatedComplexSum s;
  for (std::size_t t = 0; t < n; ++t) {
    const double u = static_cast<double>(t + 1);
    s += u * traces[t];
    seg_ratio[t] = std::abs(s.value()) / (u * u * u);
  }
  // inner sup over 2k+1 >= 2xi+1 is a suffix max
  std::vector<double> inner(n);
  double running = 0.0;
  for (std::size_t t = n; t-- > 0;) {
    running = std::max(running, seg_ratio[t]);
    inner[t] = running;
  }
  CompensatedSum lhs;
  for (std::size_t t = 0; t < n; ++t) {
    const double u = static_cast<double>(t + 1);
    lhs += std::pow(u, 3.0 * p - 4.0) * std::pow(inner[t], p);
  }
  return lhs.value();
}

VerificationReport verify_su2_converse(
    const Lattice& su2_dual, const std::vector<SU2ClassFunction>& corpus,
    double p, const HarnessOptions& opts) {
  if (!(p > 1.0 && p <= 2.0)) {
    throw std::domain_error("su2 converse requires 1 < p <= 2");
  }
  Stopwatch watch;
  VerificationReport rep;
  rep.inequality_id = "su2-converse";
  rep.config = {{"p", p},
                {"lmax_two_l", static_cast<int>(su2_dual.size()) - 1},
                {"quad_nodes", opts.quad_nodes}};

  const SubsetFamily segments = SubsetFamily::segments(su2_dual);
  const double p_prime = conjugate_exponent(p);

  rep.per_function.resize(corpus.size());
  parallel_for(corpus.size(), opts.threads, [&](std::size_t i) {
    SU2ClassFunction f = corpus[i];
    if (opts.quad_nodes > 0) f.set_quad_nodes(opts.quad_nodes);
    const CoefficientNet fhat = su2_class_fourier(f, su2_dual);

    std::vector<std::complex<double>> traces(su2_dual.size());
    for (const LatticeElement& e : su2_dual.elements()) {
      traces[static_cast<std::size_t>(su2_dual.two_l(e.id))] = fhat.trace(e.id);
    }
    const double direct = su2_converse_lhs(traces, p);

    const NetNormResult engine =
        net_norm(fhat, segments, {p_prime, p}, Engine::Exact,
                 MeasureMode::LambdaMax);
    const double engine_lhs = std::pow(engine.value, p);
    if (std::abs(direct - engine_lhs) > 1e-9 * std::max(1.0, direct)) {
      throw std::runtime_error(
          "internal-consistency failure: explicit converse formula " +
          std::to_string(direct) + " vs net-norm engine " +
          std::to_string(engine_lhs));
    }

    const double rhs = std::pow(su2_lp_norm(f, p), p);

    FunctionResult r;
    r.label = "f" + std::to_string(i);
    r.lhs = direct;
    r.rhs = rhs;
    r.ratio = rhs == 0.0 ? 0.0 : direct / rhs;
    rep.per_function[i] = std::move(r);
  });
  finalize(rep, watch);
  return rep;
}

VerificationReport verify_embedding(const Lattice& lat,
                                    const SubsetFamily& fam, double p,
                                    double q1, double q2, int corpus_size,
                                    std::uint64_t seed,
                                    const HarnessOptions& opts) {
  if (!(q1 >= 1.0) || !(q2 >= q1)) {
    throw std::invalid_argument("embedding requires 1 <= q1 <= q2");
  }
  Stopwatch watch;
  VerificationReport rep;
  rep.inequality_id = "embedding";
  rep.config = {{"p", p},
                {"q1", q1},
                {"q2", std::isinf(q2) ? nlohmann::json("inf") : nlohmann::json(q2)},
                {"family", fam.describe()},
                {"lattice_size", lat.size()},
                {"seed", seed}};

  std::mt19937_64 rng(seed);
  std::vector<CoefficientNet> corpus;
  corpus.reserve(static_cast<std::size_t>(corpus_size));
  for (int i = 0; i < corpus_size; ++i) {
    corpus.push_back(random_net(lat, rng, i % 3));
  }

  rep.per_function.resize(corpus.size());
  parallel_for(corpus.size(), opts.threads, [&](std::size_t i) {
    const NetNormResult hi = net_norm(corpus[i], fam, {p, q2}, opts.engine);
    const NetNormResult lo = net_norm(corpus[i], fam, {p, q1}, opts.engine);
    FunctionResult r;
    r.label = "net" + std::to_string(i) + ":decay" + std::to_string(i % 3);
    r.lhs = hi.value;
    r.rhs = lo.value;
    r.ratio = lo.value == 0.0 ? 0.0 : hi.value / lo.value;
    r.exact_engine = hi.exact && lo.exact;
    rep.per_function[i] = std::move(r);
  });
  finalize(rep, watch);
  return rep;
}

VerificationReport verify_kfunc_upper(const Lattice& lat, double p1, double p2,
                                      int trials, std::uint64_t seed,
                                      const HarnessOptions& opts) {
  if (!(p1 >= 1.0) || !(p2 > p1) || std::isinf(p2)) {
    throw std::invalid_argument("kfunc check requires 1 <= p1 < p2 < inf");
  }
  Stopwatch watch;
  VerificationReport rep;
  rep.inequality_id = "kfunc-upper";
  rep.config = {{"p1", p1},
                {"p2", p2},
                {"trials", trials},
                {"lattice_size", lat.size()},
                {"seed", seed}};

  const SubsetFamily fam = SubsetFamily::all_subsets(lat);
  const double reciprocal_gap = 1.0 / p1 - 1.0 / p2;

  std::mt19937_64 rng(seed);
  struct Trial {
    CoefficientNet f1;
    CoefficientNet f2;
    double t;
  };
  std::vector<Trial> inputs;
  inputs.reserve(static_cast<std::size_t>(trials));
  std::uniform_real_distribution<double> logt(std::log(1e-3), std::log(1e3));
  for (int i = 0; i < trials; ++i) {
    Trial trial{random_net(lat, rng), random_net(lat, rng), 0.0};
    trial.t = std::exp(logt(rng));
    inputs.push_back(std::move(trial));
  }

  rep.per_function.resize(inputs.size());
  std::vector<std::string> violations(inputs.size());
  parallel_for(inputs.size(), opts.threads, [&](std::size_t i) {
    const Trial& trial = inputs[i];
    const CoefficientNet f = trial.f1 + trial.f2;
    const double v = std::pow(trial.t, 1.0 / reciprocal_gap);

    const AveragingTable table =
        averaging_table(f, fam, lat.distinct_lambdas(), opts.engine);
    double lhs = 0.0;
    for (const AveragingEntry& e : table.entries) {
      if (e.level <= v) {
        lhs = std::max(lhs, std::pow(e.level, 1.0 / p1) * e.value);
      }
    }
    const NetNormResult n1 =
        net_norm(trial.f1, fam, {p1, std::numeric_limits<double>::infinity()},
                 opts.engine);
    const NetNormResult n2 =
        net_norm(trial.f2, fam, {p2, std::numeric_limits<double>::infinity()},
                 opts.engine);
    const double rhs = n1.value + trial.t * n2.value;

    FunctionResult r;
    r.label = "trial" + std::to_string(i);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs == 0.0 ? (lhs == 0.0 ? 0.0 : 1e300) : lhs / rhs;
    r.exact_engine = table.exact && n1.exact && n2.exact;
    if (lhs > rhs * (1.0 + 1e-12)) {
      // a heuristic right side is only a lower bound, so an apparent
      // violation is inconclusive unless everything ran exactly
      violations[i] = (n1.exact && n2.exact)
                          ? "trial" + std::to_string(i)
                          : "trial" + std::to_string(i) + ":inconclusive";
    }
    rep.per_function[i] = std::move(r);
  });
  for (auto& v : violations) {
    if (!v.empty()) rep.violations.push_back(std::move(v));
  }
  finalize(rep, watch);
  return rep;
}

void write_report_files(const VerificationReport& report,
                        const std::string& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream json_out(std::filesystem::path(dir) / "report.json",
                           std::ios::binary);
    json_out << report.to_json().dump(2) << "\n";
  }
  {
    std::ofstream csv_out(std::filesystem::path(dir) / "report.csv",
                          std::ios::binary);
    csv_out << report.to_csv();
  }
}

}  // namespace netspace
