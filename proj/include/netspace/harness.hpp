#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netspace/dirichlet.hpp"
#include "netspace/netnorm.hpp"
#include "netspace/su2.hpp"
#include "netspace/torus.hpp"

namespace netspace {

struct CorpusSpec {
  enum class Kind { Deterministic, Random };
  Kind kind = Kind::Random;
  int size = 50;
  std::uint64_t seed = 1;
  int decay = 1;

  /// "deterministic" or "random:<size>:seed=<s>[:decay=<d>]".
  static CorpusSpec parse(const std::string& text);
  std::string describe() const;
};

struct FunctionResult {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool exact_engine = true;
};

/// Structured outcome of one inequality campaign. runtime_seconds stays in
/// memory / on stdout; artifacts must be byte-identical across reruns and
/// thread counts, so it is never serialized.
struct VerificationReport {
  std::string inequality_id;
  std::string corpus;
  nlohmann::json config = nlohmann::json::object();
  std::vector<FunctionResult> per_function;
  double empirical_constant = 0.0;
  std::vector<std::string> violations;
  bool heuristic_used = false;
  double runtime_seconds = 0.0;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

struct HarnessOptions {
  int threads = 1;
  Engine engine = Engine::Auto;
  int grid_m = 256;    ///< torus realization grid for L^p sides
  int quad_nodes = 0;  ///< SU(2) quadrature override; 0 = auto
};

/// Deterministic chunked map; results must be written by index so output
/// is independent of the worker count.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

CoefficientNet random_net(const Lattice& lat, std::mt19937_64& rng,
                          int decay = 0);

std::vector<CoefficientNet> torus_corpus(const Lattice& zn,
                                         const CorpusSpec& spec);
std::vector<SU2ClassFunction> su2_corpus(int two_l_max,
                                         const CorpusSpec& spec);

/// Hardy-Littlewood on T: sum (1+|m|)^(p-2) |fhat(m)|^p vs ||f||_p^p,
/// forward for p <= 2, dual for p >= 2 (ratio orientation flips so the
/// claimed-finite side is always lhs/rhs).
VerificationReport verify_hl_torus(const Lattice& zn,
                                   const std::vector<CoefficientNet>& corpus,
                                   double p, const HarnessOptions& opts);

/// Net-norm bound over arithmetic progressions:
/// ||fhat||_{N_{p',q}(Z, M0)} vs ||f||_{L^{p,q}(T)}.
VerificationReport verify_ned_torus(const Lattice& zn,
                                    const std::vector<CoefficientNet>& corpus,
                                    double p, double q,
                                    const HarnessOptions& opts);

/// SU(2) converse left side: sum over xi of
/// (2xi+1)^(3p-4) * (sup over 2k+1 >= 2xi+1 of (2k+1)^-3
/// |sum over 2l+1 <= 2k+1 of (2l+1) Tr fhat(l)|)^p,
/// the p-th power form. traces[t] = Tr fhat(l) for t = 2l.
double su2_converse_lhs(const std::vector<std::complex<double>>& traces,
                        double p);

/// Runs the converse campaign and cross-checks the explicit formula against
/// the net-norm engine (segments family, top-weight measure) to 1e-9;
/// disagreement is an internal-consistency hard error.
VerificationReport verify_su2_converse(
    const Lattice& su2_dual, const std::vector<SU2ClassFunction>& corpus,
    double p, const HarnessOptions& opts);

/// ||F||_{N_{p,q2}} / ||F||_{N_{p,q1}} over random nets, q1 <= q2.
VerificationReport verify_embedding(const Lattice& lat,
                                    const SubsetFamily& fam, double p,
                                    double q1, double q2, int corpus_size,
                                    std::uint64_t seed,
                                    const HarnessOptions& opts);

/// For random F = F1 + F2 and random t: checks
///   sup over lambda_xi <= v(t) of lambda^(1/p1) Fbar[lambda_xi]
///     <= ||F1||_{N_{p1,inf}} + t ||F2||_{N_{p2,inf}},
/// v(t) = t^(1/(1/p1 - 1/p2)); true for every decomposition.
VerificationReport verify_kfunc_upper(const Lattice& lat, double p1, double p2,
                                      int trials, std::uint64_t seed,
                                      const HarnessOptions& opts);

/// Writes <dir>/report.json and <dir>/report.csv (UTF-8, sorted keys,
/// RFC 4180 quoting).
void write_report_files(const VerificationReport& report,
                        const std::string& dir);

}  // namespace netspace
