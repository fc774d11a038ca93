#include "berge/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace berge {

double binom(double n, unsigned k) {
  if (n < k) return 0.0;
  double out = 1.0;
  for (unsigned i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

std::uint64_t binom_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ typedef unsigned __int128 Wide;
  Wide out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(out);
}

double factorial(unsigned k) {
  double out = 1.0;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

namespace {

bool edge_less(const Vertex* a, const Vertex* b, unsigned r) {
  return std::lexicographical_compare(a, a + r, b, b + r);
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, unsigned r, std::vector<std::vector<Vertex>> edges) {
  std::vector<Vertex> flat;
  flat.reserve(edges.size() * r);
  for (const auto& e : edges) {
    if (e.size() != r) {
      throw ParameterError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                           std::to_string(r));
    }
    flat.insert(flat.end(), e.begin(), e.end());
  }
  *this = from_flat(n, r, std::move(flat));
}

Hypergraph Hypergraph::from_flat(std::size_t n, unsigned r, std::vector<Vertex> flat) {
  if (r < 2) throw ParameterError("uniformity must be at least 2");
  if (flat.size() % r != 0) throw ParameterError("flat edge buffer not a multiple of r");
  const std::size_t m = flat.size() / r;
  for (std::size_t i = 0; i < m; ++i) {
    Vertex* e = flat.data() + i * r;
    std::sort(e, e + r);
    for (unsigned j = 0; j < r; ++j) {
      if (e[j] >= n) throw ParameterError("vertex " + std::to_string(e[j]) + " out of range");
      if (j > 0 && e[j] == e[j - 1]) throw ParameterError("edge repeats a vertex");
    }
  }
  bool sorted = true;
  for (std::size_t i = 1; i < m && sorted; ++i) {
    sorted = edge_less(flat.data() + (i - 1) * r, flat.data() + i * r, r);
  }
  if (!sorted) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edge_less(flat.data() + a * r, flat.data() + b * r, r);
    });
    std::vector<Vertex> out(flat.size());
    for (std::size_t i = 0; i < m; ++i) {
      std::copy_n(flat.data() + order[i] * r, r, out.data() + i * r);
    }
    flat.swap(out);
    for (std::size_t i = 1; i < m; ++i) {
      if (!edge_less(flat.data() + (i - 1) * r, flat.data() + i * r, r)) {
        throw ParameterError("duplicate edge");
      }
    }
  }
  return Hypergraph(Trusted{}, n, r, std::move(flat));
}

Hypergraph::Hypergraph(Trusted, std::size_t n, unsigned r, std::vector<Vertex> flat)
    : n_(n), r_(r), flat_(std::move(flat)) {
  build_incidence();
}

void Hypergraph::build_incidence() {
  inc_start_.assign(n_ + 1, 0);
  for (Vertex v : flat_) ++inc_start_[v + 1];
  for (std::size_t v = 0; v < n_; ++v) inc_start_[v + 1] += inc_start_[v];
  inc_.assign(flat_.size(), 0);
  std::vector<std::size_t> fill(inc_start_.begin(), inc_start_.end() - 1);
  const std::size_t m = num_edges();
  for (std::size_t e = 0; e < m; ++e) {
    for (unsigned j = 0; j < r_; ++j) inc_[fill[flat_[e * r_ + j]]++] = static_cast<EdgeId>(e);
  }
}

bool Hypergraph::contains(EdgeId e, Vertex v) const {
  const auto ed = edge(e);
  return std::binary_search(ed.begin(), ed.end(), v);
}

std::optional<EdgeId> Hypergraph::find_edge(std::span<const Vertex> vertices) const {
  if (vertices.size() != r_) return std::nullopt;
  std::vector<Vertex> key(vertices.begin(), vertices.end());
  std::sort(key.begin(), key.end());
  std::size_t lo = 0, hi = num_edges();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (edge_less(flat_.data() + mid * r_, key.data(), r_)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < num_edges() && std::equal(key.begin(), key.end(), flat_.data() + lo * r_)) {
    return static_cast<EdgeId>(lo);
  }
  return std::nullopt;
}

Hypergraph Hypergraph::keep_edges(const std::vector<char>& keep) const {
  std::vector<Vertex> out;
  const std::size_t m = num_edges();
  for (std::size_t e = 0; e < m; ++e) {
    if (e < keep.size() && keep[e]) {
      out.insert(out.end(), flat_.begin() + e * r_, flat_.begin() + (e + 1) * r_);
    }
  }
  return Hypergraph(Trusted{}, n_, r_, std::move(out));
}

Hypergraph complete_hypergraph(std::size_t n, unsigned r) {
  if (r < 2) throw ParameterError("uniformity must be at least 2");
  std::vector<Vertex> flat;
  if (r <= n) {
    std::vector<Vertex> cur(r);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
      flat.insert(flat.end(), cur.begin(), cur.end());
      int i = static_cast<int>(r) - 1;
      while (i >= 0 && cur[i] == n - r + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (unsigned j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return Hypergraph::from_flat(n, r, std::move(flat));
}

VertexMask::VertexMask(std::size_t n, std::span<const Vertex> members) : bits_(n, 0) {
  for (Vertex v : members) {
    if (v >= n) throw ParameterError("vertex " + std::to_string(v) + " out of range");
    bits_[v] = 1;
  }
}

bool EdgeLedger::add(EdgeId e) {
  if (e >= used_.size()) used_.resize(static_cast<std::size_t>(e) + 1, 0);
  if (used_[e]) return false;
  used_[e] = 1;
  ++count_;
  return true;
}

void EdgeLedger::remove(EdgeId e) {
  if (contains(e)) {
    used_[e] = 0;
    --count_;
  }
}

std::vector<EdgeId> EdgeLedger::members() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < used_.size(); ++e) {
    if (used_[e]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

}  // namespace berge
