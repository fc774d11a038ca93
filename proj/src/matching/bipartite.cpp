#include <deque>
#include <limits>

#include "berge/matching.hpp"

namespace berge {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t left, std::size_t right,
               const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj), left_mate_(left, -1), right_mate_(right, -1), dist_(left, kInf) {}

  BipartiteMatching run() {
    std::size_t size = 0;
    while (bfs()) {
      next_.assign(left_mate_.size(), 0);
      for (std::size_t u = 0; u < left_mate_.size(); ++u) {
        if (left_mate_[u] == -1 && dfs(u)) ++size;
      }
    }
    return {left_mate_, right_mate_, size};
  }

 private:
  bool bfs() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < left_mate_.size(); ++u) {
      dist_[u] = left_mate_[u] == -1 ? 0 : kInf;
      if (dist_[u] == 0) queue.push_back(u);
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj_[u]) {
        const int w = right_mate_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(static_cast<std::size_t>(w));
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
      const std::size_t v = adj_[u][i];
      const int w = right_mate_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(static_cast<std::size_t>(w)))) {
        left_mate_[u] = static_cast<int>(v);
        right_mate_[v] = static_cast<int>(u);
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<int> left_mate_;
  std::vector<int> right_mate_;
  std::vector<int> dist_;
  std::vector<std::size_t> next_;
};

}  // namespace

BipartiteMatching max_bipartite_matching(std::size_t left_size, std::size_t right_size,
                                         const std::vector<std::vector<std::size_t>>& adjacency) {
  if (adjacency.size() != left_size) throw ParameterError("adjacency size differs from left size");
  for (const auto& row : adjacency) {
    for (std::size_t v : row) {
      if (v >= right_size) throw ParameterError("adjacency references a missing right vertex");
    }
  }
  return HopcroftKarp(left_size, right_size, adjacency).run();
}

std::vector<std::size_t> hall_violator(const std::vector<std::vector<std::size_t>>& adjacency,
                                       const BipartiteMatching& m) {
  std::vector<char> seen_left(m.left_mate.size(), 0);
  std::vector<char> seen_right(m.right_mate.size(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t u = 0; u < m.left_mate.size(); ++u) {
    if (m.left_mate[u] == -1) {
      seen_left[u] = 1;
      queue.push_back(u);
    }
  }
  if (queue.empty()) return {};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adjacency[u]) {
      if (seen_right[v]) continue;
      seen_right[v] = 1;
      const int w = m.right_mate[v];
      if (w != -1 && !seen_left[w]) {
        seen_left[w] = 1;
        queue.push_back(static_cast<std::size_t>(w));
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < seen_left.size(); ++u) {
    if (seen_left[u]) out.push_back(u);
  }
  return out;
}

}  // namespace berge
