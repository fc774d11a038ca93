#ifndef BERGE_CONNECT_HPP
#define BERGE_CONNECT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/walk.hpp"

namespace berge {

// ---- sampling -------------------------------------------------------------

class SamplingFailed : public std::runtime_error {
 public:
  SamplingFailed(Vertex worst, double shortfall);
  Vertex worst_vertex() const { return worst_; }
  double shortfall() const { return shortfall_; }

 private:
  Vertex worst_;
  double shortfall_;
};

struct SamplingOptions {
  /// Also require the degree condition towards V' \ U.
  bool check_complement = true;
};

/// min over v in demand of deg(v, V' \ {v}) / C(|V' \ {v}|, r-1); 1 when demand is empty.
double measured_density(const Hypergraph& h, std::span<const Vertex> pool,
                        std::span<const Vertex> demand);

/// Uniform m-subset U of `pool` such that each demand vertex keeps
/// (1-slack)*density*C(m, r-1) edges into U and (1-slack)*density*C(|pool|-m, r-1)
/// edges into the rest. Sorted output.
std::vector<Vertex> sample_inheriting_subset(const Hypergraph& h, std::span<const Vertex> pool,
                                             std::size_t m, std::span<const Vertex> demand,
                                             double density, double slack, int attempts,
                                             std::uint64_t seed,
                                             const SamplingOptions& opts = {});

// ---- expansion and layered reach ------------------------------------------

struct ExpandResult {
  std::vector<Vertex> t2;        // sorted
  std::vector<EdgeId> witness;   // witness[i] reaches t2[i]
  bool meets_threshold = false;  // |T2| >= (1/2 + gamma)|U2|
};

ExpandResult expand_step(const Hypergraph& h, std::span<const Vertex> u1,
                         std::span<const Vertex> u2, std::span<const Vertex> t1, double gamma,
                         const EdgeLedger* exclude = nullptr);

class EmptyLayer : public std::runtime_error {
 public:
  explicit EmptyLayer(std::size_t layer);
  std::size_t layer() const { return layer_; }  // 1-based

 private:
  std::size_t layer_;
};

struct LayeredReach {
  struct Back {
    Vertex prev = kNoVertex;
    EdgeId edge = kNoEdge;
  };
  std::vector<std::vector<Vertex>> layers;  // sorted
  std::vector<std::vector<Back>> predecessors;  // aligned with layers
  std::vector<EdgeId> used_edges;  // sorted

  /// Back-pointer walk from v in the last layer to the first layer.
  BergePath extract_path(Vertex v) const;
  /// Same for an arbitrary layer (0-based).
  BergePath extract_path(std::size_t layer, Vertex v) const;
  bool reaches(std::size_t layer, Vertex v) const;
};

/// Forward search T1 = W1, T_{i+1} = vertices of W_{i+1} reachable from T_i by
/// an edge {x} + S with S inside U_{i+1}. Throws EmptyLayer.
LayeredReach robust_connect(const Hypergraph& h, const std::vector<std::vector<Vertex>>& blocks,
                            const std::vector<std::vector<Vertex>>& allowed,
                            const EdgeLedger* exclude = nullptr);

// ---- path systems ---------------------------------------------------------

struct PathSystem {
  std::vector<BergePath> paths;
  std::vector<std::pair<Vertex, Vertex>> pairing;
  std::vector<Vertex> used_inner;  // sorted
  std::vector<EdgeId> used_edges;  // sorted

  /// Empty string when paths are valid, pairwise edge-disjoint, inner-disjoint
  /// and match the pairing; otherwise the first problem.
  std::string check(const Hypergraph& h) const;
};

class Exhausted : public std::runtime_error {
 public:
  explicit Exhausted(std::size_t found);
  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

/// Tries pairs (A[i], B[i]) in order, routing each through one vertex per block;
/// stops after `count` successes. Used inner vertices and edges are withheld
/// from later pairs. Edges in `ledger` are avoided and used edges are added to it.
PathSystem build_path_system(const Hypergraph& h, std::span<const Vertex> a,
                             std::span<const Vertex> b,
                             const std::vector<std::vector<Vertex>>& blocks, double gamma,
                             std::size_t count, EdgeLedger* ledger = nullptr);

enum class Parity { even, odd };

struct ConnectConfig {
  double gamma = 0.1;
  std::size_t min_block_size = 3;
  Parity parity = Parity::odd;
  int max_sample_attempts = 30;
  double inheritance_slack = 0.5;
  /// Fraction of the measured density handed to the sampler.
  double density_factor = 0.5;
  /// Blocks per round are 2*L (+1 for even parity); L = fixed_log when
  /// positive, else max(min_log, floor(log2 m)). fixed_log < 0 forces L = 0.
  int fixed_log = 0;
  unsigned min_log = 1;
  /// Block size is max(min_block_size, ceil(block_scale * live pairs)).
  double block_scale = 1.5;
  /// Blocks grow until the measured density predicts this many restricted edges per
  /// demand vertex (0 disables).
  double min_block_edges = 8.0;
  /// 0 means max(1, ceil(log2 m)) + 1.
  unsigned max_rounds = 0;
  /// Fresh endpoint pool per side is pool_factor * |live endpoints|.
  double pool_factor = 4.0;
  /// Reservoir budget multiplier for the warn-only size check.
  double budget_scale = 1.0;

  /// Throws ParameterError unless gamma lies in (0, 2^(1-r)) and min_block_size >= r.
  void validate(unsigned r) const;
  unsigned log_length(std::size_t pairs) const;
  unsigned rounds(std::size_t pairs) const;
  std::size_t blocks_per_round(std::size_t pairs) const;
  /// Inclusive path-length window for a given pair count.
  std::pair<std::size_t, std::size_t> length_window(std::size_t pairs) const;
};

/// Smallest s >= r (capped) with density * C(s-1, r-1) >= edges.
std::size_t size_for_edges(unsigned r, double density, double edges, std::size_t cap);

/// Round-one block size connect_pairs uses for `tries` pairs whose endpoints are `demand`.
std::size_t planned_block_size(const Hypergraph& h, std::span<const Vertex> pool,
                               std::span<const Vertex> demand, std::size_t tries,
                               const ConnectConfig& cfg);

class RoundFailed : public std::runtime_error {
 public:
  RoundFailed(unsigned round, std::string cause);
  unsigned round() const { return round_; }
  const std::string& cause() const { return cause_; }

 private:
  unsigned round_;
  std::string cause_;
};

struct ConnectResult {
  PathSystem system;
  std::vector<Vertex> unused_reservoir;  // sorted
  std::vector<unsigned> connected_in_round;  // per pair, 1-based
  unsigned rounds_used = 0;
  bool budget_warning = false;
};

/// Joins each (a_i, b_i) by a Berge path (a cycle when a_i = b_i) whose inner
/// vertices come from the reservoir. Paths are pairwise edge-disjoint and
/// avoid ledger edges; on success their edges are added to the ledger.
ConnectResult connect_pairs(const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                            std::span<const Vertex> reservoir, const ConnectConfig& cfg,
                            std::uint64_t seed, EdgeLedger* ledger = nullptr);

}  // namespace berge

#endif
