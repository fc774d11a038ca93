#include "berge/degree.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace berge {

namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.n()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
}

// Calls f on each l-subset of the sorted edge (as a sorted vector).
template <typename F>
void for_each_subset(std::span<const Vertex> e, unsigned l, std::vector<Vertex>& buf, F&& f) {
  const unsigned r = static_cast<unsigned>(e.size());
  std::vector<unsigned> idx(l);
  for (unsigned i = 0; i < l; ++i) idx[i] = i;
  buf.resize(l);
  while (true) {
    for (unsigned i = 0; i < l; ++i) buf[i] = e[idx[i]];
    f(buf);
    int i = static_cast<int>(l) - 1;
    while (i >= 0 && idx[i] == r - l + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::size_t degree(const Hypergraph& h, Vertex v) {
  check_vertex(h, v);
  return h.degree(v);
}

std::size_t degree(const Hypergraph& h, Vertex v, std::span<const Vertex> u) {
  check_vertex(h, v);
  const VertexMask mask(h.n(), u);
  if (mask[v]) throw ParameterError("U must not contain v");
  return degree_into(h, v, mask);
}

std::size_t degree_into(const Hypergraph& h, Vertex v, const VertexMask& u) {
  std::size_t count = 0;
  for (EdgeId e : h.incident(v)) {
    bool inside = true;
    for (Vertex w : h.edge(e)) {
      if (w != v && !u[w]) {
        inside = false;
        break;
      }
    }
    count += inside;
  }
  return count;
}

std::size_t collective_degree(const Hypergraph& h, std::span<const Vertex> t) {
  if (t.size() > h.r()) return 0;
  if (t.empty()) return h.num_edges();
  for (Vertex v : t) check_vertex(h, v);
  Vertex pivot = t[0];
  for (Vertex v : t) {
    if (h.degree(v) < h.degree(pivot)) pivot = v;
  }
  std::size_t count = 0;
  for (EdgeId e : h.incident(pivot)) {
    bool all = true;
    for (Vertex v : t) {
      if (!h.contains(e, v)) {
        all = false;
        break;
      }
    }
    count += all;
  }
  return count;
}

CollectiveMax max_collective_degree(const Hypergraph& h, unsigned l) {
  CollectiveMax out;
  if (l > h.r() || h.num_edges() == 0) return out;
  if (l == 0) {
    out.value = h.num_edges();
    return out;
  }
  std::map<std::vector<Vertex>, std::size_t> counts;
  std::vector<Vertex> buf;
  if (l <= 2) {
    // Packed keys keep the common codegree case fast.
    std::unordered_map<std::uint64_t, std::size_t> packed;
    const std::uint64_t n = h.n();
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      for_each_subset(h.edge(e), l, buf, [&](const std::vector<Vertex>& s) {
        const std::uint64_t key = l == 1 ? s[0] : s[0] * n + s[1];
        ++packed[key];
      });
    }
    std::uint64_t best_key = 0;
    for (const auto& [key, c] : packed) {
      if (c > out.value || (c == out.value && key < best_key)) {
        out.value = c;
        best_key = key;
      }
    }
    if (l == 1) {
      out.witness = {static_cast<Vertex>(best_key)};
    } else {
      out.witness = {static_cast<Vertex>(best_key / n), static_cast<Vertex>(best_key % n)};
    }
    return out;
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for_each_subset(h.edge(e), l, buf, [&](const std::vector<Vertex>& s) { ++counts[s]; });
  }
  for (const auto& [set, c] : counts) {
    if (c > out.value) {
      out.value = c;
      out.witness = set;
    }
  }
  return out;
}

std::size_t edges_between(const Hypergraph& h, std::span<const Vertex> t,
                          std::span<const Vertex> u) {
  const VertexMask umask(h.n(), u);
  for (Vertex v : t) {
    check_vertex(h, v);
    if (umask[v]) throw ParameterError("T and U overlap");
  }
  std::size_t count = 0;
  for (Vertex v : t) count += degree_into(h, v, umask);
  return count;
}

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.per_vertex.resize(h.n());
  for (Vertex v = 0; v < h.n(); ++v) p.per_vertex[v] = h.degree(v);
  if (h.n() > 0) p.min = *std::min_element(p.per_vertex.begin(), p.per_vertex.end());
  p.max_collective2 = max_collective_degree(h, 2).value;
  return p;
}

}  // namespace berge
