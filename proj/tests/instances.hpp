// Instance builders shared by the unit tests and the acceptance binary.
#ifndef BERGE_TESTS_INSTANCES_HPP
#define BERGE_TESTS_INSTANCES_HPP

#include <algorithm>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/rng.hpp"

namespace instances {

using berge::Hypergraph;
using berge::Vertex;

/// Random 3-uniform hypergraph with minimum degree >= min_degree: starts from the
/// complete hypergraph and deletes edges in random order while the bound allows,
/// stopping after a random share of the candidates so density varies.
inline Hypergraph min_degree_instance(std::size_t n, std::size_t min_degree, std::uint64_t seed) {
  const Hypergraph k = berge::complete_hypergraph(n, 3);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = k.degree(v);
  std::vector<berge::EdgeId> order(k.num_edges());
  for (berge::EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  berge::Rng rng(seed);
  rng.shuffle(order);
  const double stop = 0.6 + 0.4 * rng.uniform();
  const auto budget = static_cast<std::size_t>(stop * static_cast<double>(order.size()));
  std::vector<char> keep(k.num_edges(), 1);
  for (std::size_t i = 0; i < budget; ++i) {
    const auto e = k.edge(order[i]);
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return deg[v] > min_degree; })) {
      keep[order[i]] = 0;
      for (Vertex v : e) --deg[v];
    }
  }
  return k.keep_edges(keep);
}

/// Complete 3-graphs on each group of vertices.
inline Hypergraph union_of_cliques(std::size_t n, const std::vector<std::vector<Vertex>>& groups) {
  std::vector<std::vector<Vertex>> edges;
  for (const auto& g : groups) {
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        for (std::size_t l = j + 1; l < g.size(); ++l) {
          std::vector<Vertex> e{g[i], g[j], g[l]};
          std::sort(e.begin(), e.end());
          if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
  }
  return Hypergraph(n, 3, edges);
}

inline Hypergraph two_disjoint_k5() {
  return union_of_cliques(10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
}

inline Hypergraph two_k5_sharing_a_vertex() {
  return union_of_cliques(9, {{0, 1, 2, 3, 4}, {4, 5, 6, 7, 8}});
}

}  // namespace instances

#endif
