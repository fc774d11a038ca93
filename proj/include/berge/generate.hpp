#ifndef BERGE_GENERATE_HPP
#define BERGE_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

struct GenOptions {
  /// Enumerate all r-subsets when C(n, r) is at most this; sample otherwise.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 24;
};

/// Binomial random r-uniform hypergraph H^(r)(n, p).
Hypergraph gen_random_hypergraph(std::size_t n, unsigned r, double p, std::uint64_t seed,
                                 const GenOptions& opts = {});

struct BipartitionResult {
  Hypergraph graph;
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;
};

/// Deletes every edge crossing a uniformly random near-equipartition.
BipartitionResult adversary_bipartition(const Hypergraph& h, std::uint64_t seed);

struct TrimResult {
  Hypergraph graph;
  std::vector<double> deletion_fraction;  // per vertex, lost / original degree
};

/// Deletes a random edge set so that each vertex loses at most floor(rho * deg) edges.
TrimResult adversary_degree_trim(const Hypergraph& h, double rho, std::uint64_t seed);

}  // namespace berge

#endif
