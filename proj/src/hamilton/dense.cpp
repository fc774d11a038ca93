#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "berge/degree.hpp"
#include "berge/hamilton.hpp"
#include "berge/internal/shadow.hpp"
#include "berge/matching.hpp"

namespace berge {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t half_up(std::size_t n) { return (n + 1) / 2; }

// Closes the path into a cycle when v1 ~ vk or some i has v1 ~ v_{i+1} and vk ~ v_i.
bool close_path(const detail::Shadow& g, std::vector<Vertex>& path) {
  const std::size_t k = path.size();
  if (k < 3) return false;
  if (g.adjacent(path.front(), path.back())) return true;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (g.adjacent(path[0], path[i + 1]) && g.adjacent(path[k - 1], path[i])) {
      std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
      return true;
    }
  }
  return false;
}

// Constructive Dirac: extension, crossing closure, reopening towards outside vertices.
std::optional<std::vector<Vertex>> dirac_cycle(const detail::Shadow& g, std::uint64_t& nodes) {
  const std::size_t n = g.n();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path{0};
  on[0] = 1;
  while (true) {
    ++nodes;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int side = 0; side < 2; ++side) {
        const Vertex end = path.back();
        for (Vertex w : g.neighbours(end)) {
          if (!on[w]) {
            path.push_back(w);
            on[w] = 1;
            grew = true;
            break;
          }
        }
        std::reverse(path.begin(), path.end());
      }
    }
    if (!close_path(g, path)) return std::nullopt;
    if (path.size() == n) return path;
    // Reopen the cycle at a vertex with an outside neighbour.
    bool reopened = false;
    for (std::size_t j = 0; j < path.size() && !reopened; ++j) {
      for (Vertex x : g.neighbours(path[j])) {
        if (on[x]) continue;
        std::rotate(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(j), path.end());
        std::reverse(path.begin(), path.end());
        path.push_back(x);
        on[x] = 1;
        reopened = true;
        break;
      }
    }
    if (!reopened) return std::nullopt;  // disconnected
  }
}

// Lifts a shadow cycle to hyperedges, preferring distinct edges via a matching.
BergePath lift(const Hypergraph& h, const std::vector<Vertex>& cycle, bool& berge) {
  const std::size_t n = cycle.size();
  std::vector<std::vector<EdgeId>> cover(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 1) % n];
    for (EdgeId e : h.incident(a)) {
      if (h.contains(e, b)) cover[i].push_back(e);
    }
  }
  BergePath out;
  out.vertices = cycle;
  out.closed = true;
  for (const auto& c : cover) out.edges.push_back(c.front());
  // Distinct-edge post-pass: bipartite matching of cycle pairs to covering edges.
  std::vector<EdgeId> ids;
  for (const auto& c : cover) ids.insert(ids.end(), c.begin(), c.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (EdgeId e : cover[i]) {
      adj[i].push_back(static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), e) - ids.begin()));
    }
  }
  const BipartiteMatching m = max_bipartite_matching(n, ids.size(), adj);
  berge = m.size == n;
  if (berge) {
    for (std::size_t i = 0; i < n; ++i) out.edges[i] = ids[static_cast<std::size_t>(m.left_mate[i])];
  }
  out.is_berge = berge;
  return out;
}

}  // namespace

namespace detail {

Shadow::Shadow(const Hypergraph& h) : n_(h.n()), adj_(h.n() * h.n(), 0), lists_(h.n()) {
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    for (Vertex a : ed) {
      for (Vertex b : ed) {
        if (a != b) adj_[a * n_ + b] = 1;
      }
    }
  }
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = 0; b < n_; ++b) {
      if (adj_[a * n_ + b]) lists_[a].push_back(b);
    }
  }
}

bool Shadow::connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : lists_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

BergePath lift_cycle(const Hypergraph& h, const std::vector<Vertex>& cycle, bool& berge) {
  return lift(h, cycle, berge);
}

}  // namespace detail

SolveResult weak_hamilton_dense(const Hypergraph& h) {
  const auto start = Clock::now();
  SolveResult res;
  res.mode = WalkMode::weak;
  const std::size_t n = h.n();
  const DegreeProfile prof = degree_profile(h);
  const double bound = binom(static_cast<double>(half_up(n)) - 1.0, h.r() - 1);
  res.stats.precondition_met = static_cast<double>(prof.min) > bound;
  res.stats.precondition = "delta1=" + std::to_string(prof.min) + " > C(ceil(n/2)-1, r-1)=" +
                           std::to_string(static_cast<long long>(bound));
  if (n < 3) {
    SolveResult bf = brute_force(h, WalkMode::weak);
    bf.stats.precondition_met = res.stats.precondition_met;
    bf.stats.precondition = res.stats.precondition;
    return bf;
  }
  const detail::Shadow g(h);
  if (!g.connected()) {
    res.status = SolveStatus::not_found;
    res.stats.precondition += "; shadow graph disconnected";
  } else if (auto cycle = dirac_cycle(g, res.stats.nodes)) {
    bool berge = false;
    res.certificate = lift(h, *cycle, berge);
    res.stats.incidentally_berge = berge;
    res.status = SolveStatus::found;
  } else {
    res.status = res.stats.precondition_met ? SolveStatus::search_exhausted
                                            : SolveStatus::precondition_failed;
  }
  res.stats.elapsed_ms = ms_since(start);
  return res;
}

namespace {

// Berge path/cycle state for the longest-path solver.
struct BergeState {
  const Hypergraph& h;
  std::vector<Vertex> path;
  std::vector<EdgeId> edges;  // edges[i] joins path[i], path[i+1]
  std::vector<char> on;
  std::vector<char> used;

  explicit BergeState(const Hypergraph& g) : h(g), on(g.n(), 0), used(g.num_edges(), 0) {}

  void reset(std::vector<Vertex> p, std::vector<EdgeId> e) {
    std::fill(on.begin(), on.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    path = std::move(p);
    edges = std::move(e);
    for (Vertex v : path) on[v] = 1;
    for (EdgeId x : edges) used[x] = 1;
  }

  // Appends an outside vertex reachable from the last vertex by an unused edge.
  bool extend_back() {
    for (EdgeId e : h.incident(path.back())) {
      if (used[e]) continue;
      for (Vertex x : h.edge(e)) {
        if (!on[x]) {
          path.push_back(x);
          edges.push_back(e);
          on[x] = 1;
          used[e] = 1;
          return true;
        }
      }
    }
    return false;
  }

  void reverse() {
    std::reverse(path.begin(), path.end());
    std::reverse(edges.begin(), edges.end());
  }

  // Cycle on the path's vertices; the last edge closes back to path[0].
  bool close(std::vector<Vertex>& cyc, std::vector<EdgeId>& cyc_edges) const {
    const std::size_t k = path.size();
    if (k < 2) return false;
    const Vertex v1 = path.front(), vk = path.back();
    // Direct closure through an unused edge.
    for (EdgeId e : h.incident(v1)) {
      if (!used[e] && h.contains(e, vk)) {
        cyc = path;
        cyc_edges = edges;
        cyc_edges.push_back(e);
        return true;
      }
    }
    // Smallest (e, e', i) with v_{i+1} in e in E'(v1) and v_i in e' in E'(vk).
    // best[w] holds the two smallest unused edges at vk containing w.
    std::vector<std::pair<EdgeId, EdgeId>> best(h.n(), {kNoEdge, kNoEdge});
    for (EdgeId f : h.incident(vk)) {
      if (used[f]) continue;
      for (Vertex w : h.edge(f)) {
        auto& b = best[w];
        if (f < b.first) {
          b.second = b.first;
          b.first = f;
        } else if (f < b.second) {
          b.second = f;
        }
      }
    }
    for (EdgeId e : h.incident(v1)) {
      if (used[e]) continue;
      EdgeId best_f = kNoEdge;
      std::size_t best_i = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (!h.contains(e, path[i + 1])) continue;
        const auto& b = best[path[i]];
        const EdgeId f = b.first != e ? b.first : b.second;
        if (f < best_f) {
          best_f = f;
          best_i = i;
        }
      }
      if (best_f == kNoEdge) continue;
      const std::size_t i = best_i;
      cyc.clear();
      cyc_edges.clear();
      cyc.push_back(path[0]);
      cyc_edges.push_back(e);
      for (std::size_t j = i + 1; j < k; ++j) {
        cyc.push_back(path[j]);
        cyc_edges.push_back(j + 1 < k ? edges[j] : best_f);
      }
      for (std::size_t j = i; j >= 1; --j) {
        cyc.push_back(path[j]);
        cyc_edges.push_back(edges[j - 1]);
      }
      return true;
    }
    return false;
  }

  // Pósa-style rotation at the back end through an unused edge; returns false if none applies.
  bool rotate(std::size_t pick) {
    const std::size_t k = path.size();
    const Vertex vk = path.back();
    std::size_t seen = 0;
    for (EdgeId f : h.incident(vk)) {
      if (used[f]) continue;
      for (std::size_t i = 0; i + 2 < k; ++i) {
        if (!h.contains(f, path[i])) continue;
        if (seen++ < pick) continue;
        // v1..v_i, f, v_k, e_{k-1}, ..., v_{i+1}; edge e_i is released.
        used[edges[i]] = 0;
        used[f] = 1;
        std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
        std::vector<EdgeId> tail(edges.begin() + static_cast<std::ptrdiff_t>(i) + 1, edges.end());
        std::reverse(tail.begin(), tail.end());
        edges.resize(i);
        edges.push_back(f);
        edges.insert(edges.end(), tail.begin(), tail.end());
        return true;
      }
    }
    return false;
  }
};

}  // namespace

SolveResult berge_hamilton_dense(const Hypergraph& h) {
  const auto start = Clock::now();
  SolveResult res;
  res.mode = WalkMode::berge;
  const std::size_t n = h.n();
  const unsigned r = h.r();
  const DegreeProfile prof = degree_profile(h);
  const double bound = binom(static_cast<double>(half_up(n)) - 1.0, r - 1) + static_cast<double>(n) - 1.0;
  res.stats.precondition_met = n > 2 * static_cast<std::size_t>(r) - 2 && static_cast<double>(prof.min) >= bound;
  res.stats.precondition = "n=" + std::to_string(n) + " > 2r-2=" + std::to_string(2 * r - 2) +
                           "; delta1=" + std::to_string(prof.min) +
                           " >= C(ceil(n/2)-1, r-1)+n-1=" + std::to_string(static_cast<long long>(bound));
  auto finish = [&](SolveStatus s) {
    res.status = s;
    res.stats.elapsed_ms = ms_since(start);
    return res;
  };
  if (n == 0 || h.num_edges() < n) return finish(SolveStatus::not_found);
  if (n < 3) {
    SolveResult bf = brute_force(h, WalkMode::berge);
    bf.stats.precondition_met = res.stats.precondition_met;
    bf.stats.precondition = res.stats.precondition;
    return bf;
  }
  const SolveStatus stalled =
      res.stats.precondition_met ? SolveStatus::search_exhausted : SolveStatus::precondition_failed;

  BergeState st(h);
  st.reset({0}, {});
  const std::size_t rotation_budget = 4 * n * n;
  std::size_t rotations = 0;
  std::vector<Vertex> cyc;
  std::vector<EdgeId> cyc_edges;
  while (true) {
    ++res.stats.nodes;
    while (st.extend_back() || (st.reverse(), st.extend_back())) {
    }
    bool closed = st.close(cyc, cyc_edges);
    if (!closed) {
      // Fallback: rotations at alternating ends until an extension or closure appears.
      bool progress = false;
      std::size_t pick = 0;
      while (rotations < rotation_budget) {
        ++rotations;
        if (rotations % 2 == 0) st.reverse();
        if (!st.rotate(pick++ % 7)) {
          st.reverse();
          if (!st.rotate(0)) break;
        }
        if (st.extend_back()) {
          progress = true;
          break;
        }
        if (st.close(cyc, cyc_edges)) {
          progress = closed = true;
          break;
        }
      }
      if (!progress) return finish(stalled);
      if (!closed) continue;
    }
    if (cyc.size() == n) {
      BergePath cert{cyc, cyc_edges, true, true};
      if (!validate_walk(h, cert, WalkMode::berge).valid) {
        throw std::logic_error("dense Berge solver produced an invalid cycle");
      }
      res.certificate = std::move(cert);
      return finish(SolveStatus::found);
    }
    // Break the cycle towards an outside vertex, through a used or unused edge.
    std::vector<char> on_cycle(n, 0);
    for (Vertex v : cyc) on_cycle[v] = 1;
    std::set<EdgeId> cycle_edges(cyc_edges.begin(), cyc_edges.end());
    const std::size_t k = cyc.size();
    bool broke = false;
    for (std::size_t j = 0; j < k && !broke; ++j) {
      for (EdgeId f : h.incident(cyc[j])) {
        Vertex x = kNoVertex;
        for (Vertex w : h.edge(f)) {
          if (!on_cycle[w]) {
            x = w;
            break;
          }
        }
        if (x == kNoVertex) continue;
        std::vector<Vertex> p{x};
        std::vector<EdgeId> pe{f};
        if (!cycle_edges.count(f)) {
          // x, f, c_j, c_{j+1}, ..., c_{j-1}
          for (std::size_t s = 0; s < k; ++s) {
            p.push_back(cyc[(j + s) % k]);
            if (s + 1 < k) pe.push_back(cyc_edges[(j + s) % k]);
          }
        } else {
          // f joins c_q and c_{q+1}; reroute it to x, c_{q+1}, ..., c_q.
          const std::size_t q = static_cast<std::size_t>(
              std::find(cyc_edges.begin(), cyc_edges.end(), f) - cyc_edges.begin());
          for (std::size_t s = 1; s <= k; ++s) {
            p.push_back(cyc[(q + s) % k]);
            if (s < k) pe.push_back(cyc_edges[(q + s) % k]);
          }
        }
        st.reset(std::move(p), std::move(pe));
        broke = true;
        break;
      }
    }
    if (!broke) return finish(SolveStatus::not_found);  // no edge leaves the cycle
  }
}

}  // namespace berge
