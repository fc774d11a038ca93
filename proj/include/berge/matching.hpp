#ifndef BERGE_MATCHING_HPP
#define BERGE_MATCHING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

struct BipartiteMatching {
  std::vector<int> left_mate;   // -1 when unmatched
  std::vector<int> right_mate;  // -1 when unmatched
  std::size_t size = 0;
};

/// Hopcroft-Karp. adjacency[i] lists right neighbours of left vertex i.
BipartiteMatching max_bipartite_matching(std::size_t left_size, std::size_t right_size,
                                         const std::vector<std::vector<std::size_t>>& adjacency);

/// Left vertices reachable by alternating paths from unmatched left vertices.
/// Its neighbourhood is smaller than itself whenever the matching is not left-saturating.
std::vector<std::size_t> hall_violator(const std::vector<std::vector<std::size_t>>& adjacency,
                                       const BipartiteMatching& m);

/// Left-side set T whose neighbourhood is smaller than T.
class NoMatching : public std::runtime_error {
 public:
  explicit NoMatching(std::vector<Vertex> hall_set);
  const std::vector<Vertex>& hall_set() const { return hall_set_; }

 private:
  std::vector<Vertex> hall_set_;
};

enum class EdgePattern { one_rest, rest_one };  // (1, r-1) or (r-1, 1)

struct PairMatching {
  struct Entry {
    Vertex a;
    Vertex b;
    EdgeId edge;
    EdgePattern pattern;
  };
  std::vector<Entry> pairs;
};

struct TwoMatching {
  struct Entry {
    Vertex a;
    EdgeId e;
    EdgeId f;
    Vertex tau_e;
    Vertex tau_f;
  };
  std::vector<Entry> entries;
};

/// Saturates U1 using (1,r-1)- and (r-1,1)-edges; edges in `exclude` are ignored.
PairMatching find_U1U2_matching(const Hypergraph& h, std::span<const Vertex> u1,
                                std::span<const Vertex> u2, const EdgeLedger* exclude = nullptr);

/// Same, with (1,r-1)-edges only.
PairMatching find_one_sided_matching(const Hypergraph& h, std::span<const Vertex> u1,
                                     std::span<const Vertex> u2,
                                     const EdgeLedger* exclude = nullptr);

struct TwoMatchingOptions {
  int attempts = 8;
  double slack = 0.5;
};

/// Splits B in half, matches A one-sidedly into each half.
TwoMatching find_two_matching(const Hypergraph& h, std::span<const Vertex> a,
                              std::span<const Vertex> b, std::uint64_t seed,
                              const EdgeLedger* exclude = nullptr,
                              const TwoMatchingOptions& opts = {});

/// Empty string when valid, otherwise the first broken invariant.
std::string check_pair_matching(const Hypergraph& h, std::span<const Vertex> u1,
                                std::span<const Vertex> u2, const PairMatching& m,
                                bool one_sided = false);
std::string check_two_matching(const Hypergraph& h, std::span<const Vertex> a,
                               std::span<const Vertex> b, const TwoMatching& m);

/// Auxiliary bipartite graph of find_U1U2_matching; witness[i][j] is the edge for adjacency[i][j].
struct AuxiliaryGraph {
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::vector<EdgeId>> witness;
};
AuxiliaryGraph auxiliary_graph(const Hypergraph& h, std::span<const Vertex> u1,
                               std::span<const Vertex> u2, bool one_sided,
                               const EdgeLedger* exclude = nullptr);

}  // namespace berge

#endif
