#include "berge/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "berge/rng.hpp"

namespace berge {

BipartitionResult adversary_bipartition(const Hypergraph& h, std::uint64_t seed) {
  if (h.n() < 2 * static_cast<std::size_t>(h.r())) {
    throw ParameterError("bipartition attack needs n >= 2r");
  }
  Rng rng(seed);
  std::vector<Vertex> order(h.n());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  BipartitionResult out;
  const std::size_t half = h.n() / 2;
  out.part1.assign(order.begin(), order.begin() + half);
  out.part2.assign(order.begin() + half, order.end());
  std::sort(out.part1.begin(), out.part1.end());
  std::sort(out.part2.begin(), out.part2.end());

  const VertexMask side(h.n(), out.part1);
  std::vector<char> keep(h.num_edges(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    const bool first = side[ed[0]];
    keep[e] = std::all_of(ed.begin(), ed.end(), [&](Vertex v) { return side[v] == first; });
  }
  out.graph = h.keep_edges(keep);
  return out;
}

TrimResult adversary_degree_trim(const Hypergraph& h, double rho, std::uint64_t seed) {
  rho = std::clamp(rho, 0.0, 1.0);
  Rng rng(seed);
  std::vector<std::size_t> budget(h.n());
  for (Vertex v = 0; v < h.n(); ++v) {
    budget[v] = static_cast<std::size_t>(std::floor(rho * static_cast<double>(h.degree(v))));
  }
  std::vector<EdgeId> order(h.num_edges());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<char> keep(h.num_edges(), 1);
  std::vector<std::size_t> lost(h.n(), 0);
  for (EdgeId e : order) {
    const auto ed = h.edge(e);
    if (std::all_of(ed.begin(), ed.end(), [&](Vertex v) { return lost[v] < budget[v]; })) {
      keep[e] = 0;
      for (Vertex v : ed) ++lost[v];
    }
  }
  TrimResult out;
  out.graph = h.keep_edges(keep);
  out.deletion_fraction.resize(h.n(), 0.0);
  for (Vertex v = 0; v < h.n(); ++v) {
    if (h.degree(v) > 0) {
      out.deletion_fraction[v] = static_cast<double>(lost[v]) / static_cast<double>(h.degree(v));
    }
  }
  return out;
}

}  // namespace berge
