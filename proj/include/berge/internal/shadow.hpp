#ifndef BERGE_INTERNAL_SHADOW_HPP
#define BERGE_INTERNAL_SHADOW_HPP

#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/walk.hpp"

namespace berge::detail {

/// 2-shadow graph: u ~ w iff some edge contains both.
class Shadow {
 public:
  explicit Shadow(const Hypergraph& h);
  std::size_t n() const { return n_; }
  bool adjacent(Vertex a, Vertex b) const { return adj_[a * n_ + b] != 0; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return lists_[v]; }
  bool connected() const;

 private:
  std::size_t n_;
  std::vector<char> adj_;
  std::vector<std::vector<Vertex>> lists_;
};

/// Covers each consecutive pair of a shadow cycle by an edge; `berge` reports distinctness.
BergePath lift_cycle(const Hypergraph& h, const std::vector<Vertex>& cycle, bool& berge);

}  // namespace berge::detail

#endif
