#ifndef BERGE_HYPERGRAPH_HPP
#define BERGE_HYPERGRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "berge/types.hpp"

namespace berge {

/// Immutable r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored sorted, in lexicographic order, so edge ids are dense
/// and canonical: two hypergraphs with equal edge sets assign equal ids.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and canonicalizes. Throws ParameterError on a bad edge or duplicate.
  Hypergraph(std::size_t n, unsigned r, std::vector<std::vector<Vertex>> edges);

  /// Same, from a flat buffer of |E|*r vertex ids.
  static Hypergraph from_flat(std::size_t n, unsigned r, std::vector<Vertex> flat);

  std::size_t n() const { return n_; }
  unsigned r() const { return r_; }
  std::size_t num_edges() const { return r_ == 0 ? 0 : flat_.size() / r_; }

  std::span<const Vertex> edge(EdgeId e) const {
    return {flat_.data() + static_cast<std::size_t>(e) * r_, r_};
  }
  std::span<const EdgeId> incident(Vertex v) const {
    return {inc_.data() + inc_start_[v], inc_start_[v + 1] - inc_start_[v]};
  }
  std::size_t degree(Vertex v) const { return inc_start_[v + 1] - inc_start_[v]; }

  bool contains(EdgeId e, Vertex v) const;

  /// Id of the edge with exactly these vertices (any order), if present.
  std::optional<EdgeId> find_edge(std::span<const Vertex> vertices) const;

  /// Hypergraph keeping the edges with keep[e] != 0. Ids are reassigned densely.
  Hypergraph keep_edges(const std::vector<char>& keep) const;

  const std::vector<Vertex>& flat() const { return flat_; }

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && r_ == other.r_ && flat_ == other.flat_;
  }

 private:
  struct Trusted {};
  Hypergraph(Trusted, std::size_t n, unsigned r, std::vector<Vertex> flat);
  void build_incidence();

  std::size_t n_ = 0;
  unsigned r_ = 2;
  std::vector<Vertex> flat_;
  std::vector<std::size_t> inc_start_{0};
  std::vector<EdgeId> inc_;
};

/// Complete r-uniform hypergraph on n vertices.
Hypergraph complete_hypergraph(std::size_t n, unsigned r);

/// Membership bitmap over 0..n-1.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : bits_(n, 0) {}
  VertexMask(std::size_t n, std::span<const Vertex> members);

  bool operator[](Vertex v) const { return v < bits_.size() && bits_[v] != 0; }
  void set(Vertex v, bool on = true) { bits_[v] = on ? 1 : 0; }
  std::size_t size() const { return bits_.size(); }

 private:
  std::vector<char> bits_;
};

/// Set of edge ids reserved by some construction.
class EdgeLedger {
 public:
  EdgeLedger() = default;
  explicit EdgeLedger(std::size_t num_edges) : used_(num_edges, 0) {}

  bool contains(EdgeId e) const { return e < used_.size() && used_[e] != 0; }
  /// Returns false if the edge was already present.
  bool add(EdgeId e);
  void remove(EdgeId e);
  std::size_t count() const { return count_; }
  std::vector<EdgeId> members() const;

 private:
  std::vector<char> used_;
  std::size_t count_ = 0;
};

}  // namespace berge

#endif
