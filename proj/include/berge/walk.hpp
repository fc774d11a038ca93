#ifndef BERGE_WALK_HPP
#define BERGE_WALK_HPP

#include <string>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

enum class WalkMode { weak, berge };

/// Alternating vertex/edge sequence. A path v1..vk carries k-1 edges,
/// where edges[i] covers (vertices[i], vertices[i+1]). A closed walk carries
/// k edges, the last one covering (vk, v1).
struct BergePath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  bool closed = false;
  bool is_berge = false;

  /// Edge count for paths, vertex count for cycles.
  std::size_t length() const { return closed ? vertices.size() : edges.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  /// The same path traversed backwards.
  BergePath reversed() const;

  /// Appends `tail`, whose first vertex must equal this path's last vertex.
  void append(const BergePath& tail);

  bool operator==(const BergePath&) const = default;
};

struct WalkReport {
  bool well_formed = false;  // non-empty, edge count matches, ids in range
  bool vertices_distinct = false;
  bool pairs_covered = false;
  bool edges_distinct = false;
  bool spanning = false;
  bool valid = false;  // all checks required by the mode
  std::string first_violation;

  explicit operator bool() const { return valid; }
};

WalkReport validate_walk(const Hypergraph& h, const BergePath& w, WalkMode mode);

/// validate_walk plus the spanning requirement.
bool is_hamilton(const Hypergraph& h, const BergePath& w, WalkMode mode);

}  // namespace berge

#endif
