// Independent reference implementations used as test oracles.
#ifndef BERGE_TESTS_ORACLES_HPP
#define BERGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/walk.hpp"

namespace oracle {

using berge::EdgeId;
using berge::Hypergraph;
using berge::Vertex;

inline std::vector<std::vector<Vertex>> edge_list(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto s = h.edge(e);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

inline bool has(const std::vector<Vertex>& e, Vertex v) {
  return std::find(e.begin(), e.end(), v) != e.end();
}

inline std::size_t degree(const Hypergraph& h, Vertex v) {
  std::size_t d = 0;
  for (const auto& e : edge_list(h)) d += has(e, v);
  return d;
}

/// Edges with v in e and e \ {v} inside u.
inline std::size_t restricted_degree(const Hypergraph& h, Vertex v, const std::vector<Vertex>& u) {
  std::size_t d = 0;
  for (const auto& e : edge_list(h)) {
    if (!has(e, v)) continue;
    bool ok = true;
    for (Vertex x : e) ok = ok && (x == v || has(u, x));
    d += ok;
  }
  return d;
}

/// e(T, C(U, r-1)): edges with exactly one vertex in T and r-1 in U.
inline std::size_t between(const Hypergraph& h, const std::vector<Vertex>& t,
                           const std::vector<Vertex>& u) {
  std::size_t c = 0;
  for (const auto& e : edge_list(h)) {
    std::size_t in_t = 0, in_u = 0;
    for (Vertex x : e) {
      in_t += has(t, x);
      in_u += has(u, x);
    }
    c += in_t == 1 && in_u + 1 == e.size();
  }
  return c;
}

inline std::size_t max_codegree(const Hypergraph& h) {
  std::size_t best = 0;
  for (Vertex a = 0; a < h.n(); ++a) {
    for (Vertex b = a + 1; b < h.n(); ++b) {
      std::size_t c = 0;
      for (const auto& e : edge_list(h)) c += has(e, a) && has(e, b);
      best = std::max(best, c);
    }
  }
  return best;
}

/// Maximum bipartite matching by exhaustive DP over subsets of the right side.
inline std::size_t max_matching_dp(std::size_t left, std::size_t right,
                                   const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<int> best(std::size_t{1} << right, -1);
  best[0] = 0;
  int answer = 0;
  // Process left vertices one at a time; dp over used right sets.
  std::vector<int> cur = best;
  for (std::size_t i = 0; i < left; ++i) {
    std::vector<int> next = cur;
    for (std::size_t mask = 0; mask < cur.size(); ++mask) {
      if (cur[mask] < 0) continue;
      for (std::size_t j : adj[i]) {
        if (mask >> j & 1) continue;
        const std::size_t nm = mask | (std::size_t{1} << j);
        next[nm] = std::max(next[nm], cur[mask] + 1);
      }
    }
    cur = std::move(next);
  }
  for (int v : cur) answer = std::max(answer, v);
  return static_cast<std::size_t>(answer);
}

/// Can distinct edges be assigned to the consecutive pairs of `order` (closed)?
inline bool berge_assignable(const Hypergraph& h, const std::vector<Vertex>& order) {
  const auto edges = edge_list(h);
  const std::size_t k = order.size();
  std::vector<std::vector<std::size_t>> opts(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = order[i], b = order[(i + 1) % k];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (has(edges[e], a) && has(edges[e], b)) opts[i].push_back(e);
    }
    if (opts[i].empty()) return false;
  }
  std::vector<char> used(edges.size(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == k) return true;
    for (std::size_t e : opts[i]) {
      if (used[e]) continue;
      used[e] = 1;
      if (go(i + 1)) return true;
      used[e] = 0;
    }
    return false;
  };
  return go(0);
}

inline bool covered(const Hypergraph& h, Vertex a, Vertex b) {
  for (const auto& e : edge_list(h)) {
    if (has(e, a) && has(e, b)) return true;
  }
  return false;
}

/// Hamiltonicity by enumerating vertex orders starting at 0.
inline bool hamiltonian(const Hypergraph& h, bool berge_mode) {
  const std::size_t n = h.n();
  if (n < 2) return false;
  if (berge_mode && h.num_edges() < n) return false;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0u);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = covered(h, order[i], order[(i + 1) % n]);
    if (ok && (!berge_mode || berge_assignable(h, order))) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

/// Direct re-check of a Hamilton certificate, independent of the library validator.
inline bool certificate_ok(const Hypergraph& h, const berge::BergePath& w, bool berge_mode) {
  const std::size_t k = w.vertices.size();
  if (k != h.n() || !w.closed || w.edges.size() != k) return false;
  std::set<Vertex> seen(w.vertices.begin(), w.vertices.end());
  if (seen.size() != k || *seen.rbegin() >= h.n()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (w.edges[i] >= h.num_edges()) return false;
    auto e = h.edge(w.edges[i]);
    std::vector<Vertex> ev(e.begin(), e.end());
    if (!has(ev, w.vertices[i]) || !has(ev, w.vertices[(i + 1) % k])) return false;
  }
  if (berge_mode) {
    std::set<EdgeId> ids(w.edges.begin(), w.edges.end());
    if (ids.size() != k) return false;
  }
  return true;
}

}  // namespace oracle

#endif
