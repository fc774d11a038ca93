#include <algorithm>
#include <chrono>
#include <numeric>

#include "berge/hamilton.hpp"
#include "berge/internal/shadow.hpp"
#include "berge/rng.hpp"

namespace berge {

namespace {

using Clock = std::chrono::steady_clock;

// Cheap certificates of non-Hamiltonicity for the shadow graph.
std::optional<std::string> absence_proof(const detail::Shadow& g) {
  const std::size_t n = g.n();
  for (Vertex v = 0; v < n; ++v) {
    if (g.neighbours(v).size() < 2) {
      return "vertex " + std::to_string(v) + " has fewer than two shadow neighbours";
    }
  }
  if (!g.connected()) return std::string("shadow graph disconnected");
  // Degree-2 vertices force both incident pairs.
  std::vector<std::size_t> forced(n, 0);
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < n; ++v) {
    if (g.neighbours(v).size() != 2) continue;
    for (Vertex w : g.neighbours(v)) {
      const auto key = std::minmax(v, w);
      pairs.emplace_back(key.first, key.second);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<std::size_t> size(n, 1);
  for (const auto& [a, b] : pairs) {
    if (++forced[a] > 2 || ++forced[b] > 2) {
      return std::string("a vertex is forced onto three cycle edges");
    }
    const Vertex ra = find(a), rb = find(b);
    if (ra == rb) {
      if (size[ra] < n) return std::string("forced edges close a short cycle");
    } else {
      parent[ra] = rb;
      size[rb] += size[ra];
    }
  }
  return std::nullopt;
}

// Randomized rotation-extension on the shadow graph.
std::optional<std::vector<Vertex>> posa(const detail::Shadow& g, Rng& rng, std::uint64_t steps,
                                        std::uint64_t& nodes) {
  const std::size_t n = g.n();
  std::vector<Vertex> path{static_cast<Vertex>(rng.below(n))};
  std::vector<std::size_t> pos(n, SIZE_MAX);
  pos[path[0]] = 0;
  auto reindex = [&](std::size_t from) {
    for (std::size_t i = from; i < path.size(); ++i) pos[path[i]] = i;
  };
  std::vector<Vertex> fresh;
  for (std::uint64_t step = 0; step < steps; ++step) {
    ++nodes;
    const Vertex end = path.back();
    fresh.clear();
    for (Vertex w : g.neighbours(end)) {
      if (pos[w] == SIZE_MAX) fresh.push_back(w);
    }
    if (!fresh.empty()) {
      Vertex pick = fresh[rng.below(fresh.size())];
      path.push_back(pick);
      pos[pick] = path.size() - 1;
      continue;
    }
    if (path.size() == n && g.adjacent(end, path.front())) return path;
    if (rng.below(8) == 0) {
      std::reverse(path.begin(), path.end());
      reindex(0);
      continue;
    }
    const auto& nb = g.neighbours(end);
    const Vertex w = nb[rng.below(nb.size())];
    const std::size_t i = pos[w];
    if (i + 1 >= path.size()) continue;
    std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
    reindex(i + 1);
  }
  return std::nullopt;
}

// Exhaustive DFS with degree pruning and a node cap.
class Backtrack {
 public:
  Backtrack(const detail::Shadow& g, std::uint64_t cap) : g_(g), cap_(cap) {}

  // 1 found, 0 proven absent, -1 cap reached.
  int run(std::vector<Vertex>& out, std::uint64_t& nodes) {
    const std::size_t n = g_.n();
    Vertex start = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (g_.neighbours(v).size() < g_.neighbours(start).size()) start = v;
    }
    on_.assign(n, 0);
    free_deg_.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) free_deg_[v] = g_.neighbours(v).size();
    path_ = {start};
    take(start);
    const int r = dfs();
    nodes += nodes_;
    if (r == 1) out = path_;
    return r;
  }

 private:
  void take(Vertex v) {
    on_[v] = 1;
    for (Vertex w : g_.neighbours(v)) --free_deg_[w];
  }
  void release(Vertex v) {
    on_[v] = 0;
    for (Vertex w : g_.neighbours(v)) ++free_deg_[w];
  }

  int dfs() {
    if (++nodes_ > cap_) return -1;
    const std::size_t n = g_.n();
    const Vertex end = path_.back();
    if (path_.size() == n) return g_.adjacent(end, path_.front()) ? 1 : 0;
    // Every outside vertex needs two usable neighbours (outside, the end, or the start).
    for (Vertex v = 0; v < n; ++v) {
      if (on_[v]) continue;
      std::size_t usable = free_deg_[v] + g_.adjacent(v, end) + (path_.size() > 1 && g_.adjacent(v, path_.front()));
      if (usable < 2) return 0;
    }
    std::vector<Vertex> next;
    for (Vertex w : g_.neighbours(end)) {
      if (!on_[w]) next.push_back(w);
    }
    std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return free_deg_[a] != free_deg_[b] ? free_deg_[a] < free_deg_[b] : a < b;
    });
    for (Vertex w : next) {
      path_.push_back(w);
      take(w);
      const int r = dfs();
      if (r == 1) return 1;
      release(w);
      path_.pop_back();
      if (r == -1) return -1;
    }
    return 0;
  }

  const detail::Shadow& g_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<char> on_;
  std::vector<std::size_t> free_deg_;
  std::vector<Vertex> path_;
};

}  // namespace

SolveResult weak_hamilton_search(const Hypergraph& h, const SearchOptions& opts) {
  const auto start = Clock::now();
  auto done = [&](SolveResult res) {
    res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return res;
  };
  if (h.n() < 3) return brute_force(h, WalkMode::weak, {h.n(), true});
  SolveResult res;
  res.mode = WalkMode::weak;
  const detail::Shadow g(h);
  if (auto proof = absence_proof(g)) {
    res.status = SolveStatus::not_found;
    res.stats.precondition = *proof;
    return done(res);
  }
  Rng rng(opts.seed);
  std::optional<std::vector<Vertex>> cycle;
  for (unsigned i = 0; i < opts.restarts && !cycle; ++i) {
    cycle = posa(g, rng, opts.rotation_steps, res.stats.nodes);
  }
  if (!cycle) {
    std::vector<Vertex> out;
    const int r = Backtrack(g, opts.backtrack_nodes).run(out, res.stats.nodes);
    if (r == 1) cycle = out;
    if (r == 0) {
      res.status = SolveStatus::not_found;
      res.stats.precondition = "exhaustive search";
      return done(res);
    }
  }
  if (!cycle) {
    res.status = SolveStatus::search_exhausted;
    return done(res);
  }
  bool berge = false;
  res.certificate = detail::lift_cycle(h, *cycle, berge);
  res.stats.incidentally_berge = berge;
  res.status = SolveStatus::found;
  return done(res);
}

Hypergraph sparsify(const Hypergraph& h, double q, std::uint64_t seed) {
  if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("q must lie in [0, 1]");
  Rng rng(seed);
  std::vector<char> keep(h.num_edges());
  for (auto& k : keep) k = rng.bernoulli(q);
  return h.keep_edges(keep);
}

}  // namespace berge
