#include "berge/walk.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace berge {

BergePath BergePath::reversed() const {
  BergePath out = *this;
  std::reverse(out.vertices.begin(), out.vertices.end());
  if (closed) {
    // Cycle v1..vk with edge i covering (v_i, v_{i+1}); reversed order
    // vk..v1 needs edge i covering (v_{k-i}, v_{k-i-1}).
    const std::size_t k = edges.size();
    for (std::size_t i = 0; i + 1 < k; ++i) out.edges[i] = edges[k - 2 - i];
    if (k > 0) out.edges[k - 1] = edges[k - 1];
  } else {
    std::reverse(out.edges.begin(), out.edges.end());
  }
  return out;
}

void BergePath::append(const BergePath& tail) {
  if (vertices.empty()) {
    *this = tail;
    return;
  }
  if (tail.vertices.empty() || tail.front() != back()) {
    throw ParameterError("appended path does not start at the current end");
  }
  vertices.insert(vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  edges.insert(edges.end(), tail.edges.begin(), tail.edges.end());
  is_berge = false;
}

WalkReport validate_walk(const Hypergraph& h, const BergePath& w, WalkMode mode) {
  WalkReport rep;
  auto fail = [&rep](std::string msg) {
    if (rep.first_violation.empty()) rep.first_violation = std::move(msg);
  };
  const std::size_t k = w.vertices.size();
  const std::size_t want_edges = w.closed ? k : (k == 0 ? 0 : k - 1);

  rep.well_formed = k > 0 && w.edges.size() == want_edges;
  if (k == 0) fail("empty vertex sequence");
  if (w.edges.size() != want_edges) {
    fail("expected " + std::to_string(want_edges) + " edges, got " +
         std::to_string(w.edges.size()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (w.vertices[i] >= h.n()) {
      rep.well_formed = false;
      fail("vertex " + std::to_string(w.vertices[i]) + " at position " + std::to_string(i) +
           " out of range");
    }
  }
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (w.edges[i] >= h.num_edges()) {
      rep.well_formed = false;
      fail("edge id " + std::to_string(w.edges[i]) + " at position " + std::to_string(i) +
           " out of range");
    }
  }

  rep.vertices_distinct = true;
  {
    std::vector<char> seen(h.n(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex v = w.vertices[i];
      if (v >= h.n()) continue;
      if (seen[v]) {
        rep.vertices_distinct = false;
        fail("vertex " + std::to_string(v) + " repeated at position " + std::to_string(i));
      }
      seen[v] = 1;
    }
  }

  rep.pairs_covered = rep.well_formed;
  if (rep.well_formed) {
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      const Vertex a = w.vertices[i];
      const Vertex b = w.vertices[(i + 1) % k];
      if (!h.contains(w.edges[i], a) || !h.contains(w.edges[i], b)) {
        rep.pairs_covered = false;
        fail("edge " + std::to_string(w.edges[i]) + " at position " + std::to_string(i) +
             " does not contain {" + std::to_string(a) + "," + std::to_string(b) + "}");
      }
    }
  }

  rep.edges_distinct = true;
  {
    std::unordered_set<EdgeId> seen;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      if (!seen.insert(w.edges[i]).second) {
        rep.edges_distinct = false;
        if (mode == WalkMode::berge) {
          fail("edge " + std::to_string(w.edges[i]) + " repeated at position " +
               std::to_string(i));
        }
      }
    }
  }

  rep.spanning = rep.vertices_distinct && rep.well_formed && k == h.n();
  rep.valid = rep.well_formed && rep.vertices_distinct && rep.pairs_covered &&
              (mode == WalkMode::weak || rep.edges_distinct);
  return rep;
}

bool is_hamilton(const Hypergraph& h, const BergePath& w, WalkMode mode) {
  const WalkReport rep = validate_walk(h, w, mode);
  return rep.valid && rep.spanning && w.closed;
}

}  // namespace berge
