#ifndef BERGE_ABSORB_HPP
#define BERGE_ABSORB_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "berge/connect.hpp"

namespace berge {

/// Odd cycle (u, v1, ..., v_2t) with chord paths; chord i joins v_{i+1} and v_{2t+1-i}.
struct Absorber {
  Vertex u = kNoVertex;
  BergePath cycle;  // closed, vertices[0] == u
  std::vector<BergePath> chords;

  unsigned t() const { return static_cast<unsigned>((cycle.vertices.size() - 1) / 2); }
  /// v_i in 1-based cycle numbering (v_0 is u).
  Vertex v(std::size_t i) const { return cycle.vertices.at(i); }
  std::pair<Vertex, Vertex> main_endpoints() const { return {v(1), v(t() + 1)}; }
};

/// Empty when the absorber meets its definition, else the first problem.
std::string check_absorber(const Hypergraph& h, const Absorber& a);

struct AbsorberTraversals {
  BergePath with_u;
  BergePath without_u;
};

/// Both run from v1 to v_{t+1}; they differ exactly in covering u.
AbsorberTraversals absorber_traversals(const Hypergraph& h, const Absorber& a);

class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& cause);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct AbsorberConfig {
  ConnectConfig cycles;  // parity forced odd, at least 4 blocks
  ConnectConfig chords;
  /// Shares of Y carved for the cycle and chord stages.
  double cycle_share = 0.55;
  double chord_share = 0.25;
  int sample_attempts = 30;
  double sample_slack = 0.5;
  double density_factor = 0.5;

  static AbsorberConfig standard();
};

struct AbsorberBuild {
  std::vector<Absorber> absorbers;
  std::vector<Vertex> remaining;  // Y minus every absorber vertex
};

/// One absorber per vertex of Z, built inside Y. Absorber edges are added to the ledger.
AbsorberBuild build_absorbers(const Hypergraph& h, std::span<const Vertex> z,
                              std::span<const Vertex> y, const AbsorberConfig& cfg,
                              std::uint64_t seed, EdgeLedger* ledger = nullptr);

struct AbsorbingPath {
  std::vector<Absorber> absorbers;
  std::vector<AbsorberTraversals> traversals;  // aligned with absorbers
  std::vector<BergePath> connectors;  // connectors[i] joins absorber i to i+1
  std::vector<Vertex> reservoir;      // sorted u's
  std::pair<Vertex, Vertex> endpoints{kNoVertex, kNoVertex};
  std::vector<Vertex> unused;  // Y' vertices left after connecting
};

AbsorbingPath assemble_absorbing_path(const Hypergraph& h, std::vector<Absorber> absorbers,
                                      std::span<const Vertex> y_rest, const ConnectConfig& cfg,
                                      std::uint64_t seed, EdgeLedger* ledger = nullptr);

/// Absorbers whose u lies in `absorbed` use their u-free traversal.
BergePath materialize(const AbsorbingPath& p, std::span<const Vertex> absorbed);

}  // namespace berge

#endif
