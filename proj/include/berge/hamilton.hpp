#ifndef BERGE_HAMILTON_HPP
#define BERGE_HAMILTON_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/absorb.hpp"
#include "berge/connect.hpp"
#include "berge/hypergraph.hpp"
#include "berge/walk.hpp"

namespace berge {

enum class SolveStatus { found, not_found, precondition_failed, search_exhausted };

std::string to_string(SolveStatus s);
/// 0 found, 3 not found, 4 precondition failed, 5 search exhausted.
int exit_code(SolveStatus s);

struct StageOutcome {
  std::string stage;
  bool ok = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct StageFailure {
  std::string stage;
  std::string cause;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
  bool precondition_met = true;
  std::string precondition;
  std::vector<StageOutcome> stages;
  std::optional<StageFailure> failure;
  /// Weak solvers only: the certificate happens to use distinct edges.
  bool incidentally_berge = false;
};

struct SolveResult {
  SolveStatus status = SolveStatus::search_exhausted;
  WalkMode mode = WalkMode::berge;
  std::optional<BergePath> certificate;
  SolveStats stats;
};

/// Dirac-type solver through the 2-shadow graph.
SolveResult weak_hamilton_dense(const Hypergraph& h);

/// Longest-Berge-path rotation solver.
SolveResult berge_hamilton_dense(const Hypergraph& h);

struct BruteForceOptions {
  std::size_t max_n = 10;
  bool override_cap = false;
};

/// Exhaustive search; not_found is a proof of absence.
SolveResult brute_force(const Hypergraph& h, WalkMode mode, const BruteForceOptions& opts = {});

struct SearchOptions {
  std::uint64_t seed = 1;
  unsigned restarts = 40;
  std::uint64_t rotation_steps = 20000;
  std::uint64_t backtrack_nodes = 2000000;
};

/// Weak Hamiltonicity for sparse instances: cheap proofs of absence, randomized
/// rotation-extension, then capped backtracking.
SolveResult weak_hamilton_search(const Hypergraph& h, const SearchOptions& opts = {});

/// Keeps each edge independently with probability q.
Hypergraph sparsify(const Hypergraph& h, double q, std::uint64_t seed);

class StageFailed : public std::runtime_error {
 public:
  StageFailed(std::string stage, std::string cause);
  const std::string& stage() const { return stage_; }
  const std::string& cause() const { return cause_; }

 private:
  std::string stage_;
  std::string cause_;
};

struct PipelineConfig {
  double gamma = 0.1;
  std::uint64_t seed = 1;

  // Reservoir Z: explicit size, or n / log2(n)^c1.
  std::size_t z_size = 0;
  double c1 = 1.25;
  /// Z also grows until each vertex expects this many edges inside it (0 disables).
  double z_min_edges = 0.0;
  // Working set Y: explicit size, or y_coef * |Z| * log2(n)^y_exp.
  std::size_t y_size = 0;
  double y_coef = 8.0;
  double y_exp = 0.0;
  /// Y shrinks so that W keeps at least this share of n (0 disables).
  double w_min_share = 0.0;
  // Cover of W: at most log2(n)^c2 blocks (c2 <= 0: no cap), each of size >= w_min_block.
  double c2 = 0.0;
  std::size_t w_min_block = 2;
  int cover_attempts = 20;

  // Carving of Z, Y, W.
  int sample_attempts = 40;
  double sample_slack = 0.5;
  double density_factor = 0.5;

  /// Full runs before giving up. Run k >= 1 uses a fresh seed and scales
  /// z_min_edges and every min_block_edges by relax^k.
  int attempts = 1;
  double relax = 0.6;
  AbsorberConfig absorber = AbsorberConfig::standard();
  ConnectConfig connector;  // joins absorbers into the absorbing path
  ConnectConfig closing;    // joins all segments through Z

  /// Desk-scale defaults: short connections, small blocks.
  static PipelineConfig desk();
  /// Asymptotic shapes with the exponents used in the proof.
  static PipelineConfig asymptotic();

  /// `density` is the measured minimum normalized degree, used by z_min_edges.
  struct Sizes {
    std::size_t z = 0;
    std::size_t y = 0;
    std::size_t w = 0;
  };
  /// Throws ParameterError when the sizes do not fit into n.
  Sizes resolve(std::size_t n, unsigned r = 3, double density = 1.0) const;
};

/// Absorbing-path pipeline. Failures carry a StageFailure in stats.
SolveResult berge_hamilton_resilient(const Hypergraph& h, const PipelineConfig& cfg);

}  // namespace berge

#endif
