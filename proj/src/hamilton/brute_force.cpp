#include <algorithm>
#include <chrono>
#include <string>

#include "berge/hamilton.hpp"

namespace berge {

namespace {

// Edges covering each unordered vertex pair (a == b allowed).
class PairEdges {
 public:
  explicit PairEdges(const Hypergraph& h) : n_(h.n()), cover_(h.n() * h.n()) {
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const auto ed = h.edge(e);
      for (Vertex a : ed) {
        for (Vertex b : ed) cover_[a * n_ + b].push_back(e);
      }
    }
  }
  const std::vector<EdgeId>& operator()(Vertex a, Vertex b) const { return cover_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::vector<EdgeId>> cover_;
};

class Search {
 public:
  Search(const Hypergraph& h, WalkMode mode) : h_(h), mode_(mode), cover_(h) {}

  std::optional<BergePath> run(std::uint64_t& nodes) {
    const std::size_t n = h_.n();
    visited_.assign(n, 0);
    order_ = {0};
    visited_[0] = 1;
    owner_.assign(h_.num_edges(), -1);
    pair_edge_.clear();
    const bool ok = dfs(nodes);
    nodes_ = nodes;
    if (!ok) return std::nullopt;
    BergePath out;
    out.vertices = order_;
    out.closed = true;
    if (mode_ == WalkMode::berge) {
      out.edges.assign(pair_edge_.begin(), pair_edge_.end());
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        out.edges.push_back(cover_(order_[i], order_[(i + 1) % n]).front());
      }
    }
    out.is_berge = validate_walk(h_, out, WalkMode::berge).valid;
    return out;
  }

 private:
  // Kuhn augmentation for the newest pair; owner_/pair_edge_ track the assignment.
  bool augment(std::size_t pair, std::vector<char>& seen) {
    const Vertex a = pairs_[pair].first, b = pairs_[pair].second;
    for (EdgeId e : cover_(a, b)) {
      if (seen[e]) continue;
      seen[e] = 1;
      if (owner_[e] == -1 || augment(static_cast<std::size_t>(owner_[e]), seen)) {
        owner_[e] = static_cast<int>(pair);
        pair_edge_[pair] = e;
        return true;
      }
    }
    return false;
  }

  bool push_pair(Vertex a, Vertex b) {
    if (cover_(a, b).empty()) return false;
    if (mode_ == WalkMode::weak) return true;
    saved_.push_back({owner_, pair_edge_});
    pairs_.emplace_back(a, b);
    pair_edge_.push_back(kNoEdge);
    std::vector<char> seen(h_.num_edges(), 0);
    if (augment(pairs_.size() - 1, seen)) return true;
    pop_pair();
    return false;
  }

  void pop_pair() {
    if (mode_ == WalkMode::weak) return;
    owner_ = std::move(saved_.back().first);
    pair_edge_ = std::move(saved_.back().second);
    saved_.pop_back();
    pairs_.pop_back();
  }

  bool dfs(std::uint64_t& nodes) {
    ++nodes;
    const std::size_t n = h_.n();
    const Vertex last = order_.back();
    if (order_.size() == n) {
      if (push_pair(last, order_.front())) return true;
      return false;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (visited_[v]) continue;
      if (!push_pair(last, v)) continue;
      visited_[v] = 1;
      order_.push_back(v);
      if (dfs(nodes)) return true;
      order_.pop_back();
      visited_[v] = 0;
      pop_pair();
    }
    return false;
  }

  const Hypergraph& h_;
  WalkMode mode_;
  PairEdges cover_;
  std::vector<char> visited_;
  std::vector<Vertex> order_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<int> owner_;
  std::vector<EdgeId> pair_edge_;
  std::vector<std::pair<std::vector<int>, std::vector<EdgeId>>> saved_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult brute_force(const Hypergraph& h, WalkMode mode, const BruteForceOptions& opts) {
  if (h.n() > opts.max_n && !opts.override_cap) {
    throw ParameterError("brute force capped at n=" + std::to_string(opts.max_n));
  }
  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.mode = mode;
  if (h.n() == 0 || (mode == WalkMode::berge && h.num_edges() < h.n())) {
    res.status = SolveStatus::not_found;
  } else {
    Search search(h, mode);
    auto cert = search.run(res.stats.nodes);
    if (cert) {
      res.status = SolveStatus::found;
      res.stats.incidentally_berge = cert->is_berge;
      res.certificate = std::move(cert);
    } else {
      res.status = SolveStatus::not_found;
    }
  }
  res.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace berge
