#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>

#include "berge/connect.hpp"
#include "berge/matching.hpp"
#include "berge/rng.hpp"

namespace berge {

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::unordered_map<Vertex, std::size_t> index_of(std::span<const Vertex> vs) {
  std::unordered_map<Vertex, std::size_t> out;
  for (std::size_t i = 0; i < vs.size(); ++i) out.emplace(vs[i], i);
  return out;
}

void check_disjoint(std::size_t n, std::span<const Vertex> u1, std::span<const Vertex> u2) {
  const VertexMask m1(n, u1);
  for (Vertex v : u2) {
    if (v >= n) throw ParameterError("vertex out of range");
    if (m1[v]) throw ParameterError("vertex sets overlap");
  }
}

PairMatching match_impl(const Hypergraph& h, std::span<const Vertex> u1,
                        std::span<const Vertex> u2, bool one_sided, const EdgeLedger* exclude) {
  check_disjoint(h.n(), u1, u2);
  if (u1.size() > u2.size()) throw ParameterError("need |U1| <= |U2|");
  const AuxiliaryGraph aux = auxiliary_graph(h, u1, u2, one_sided, exclude);
  const BipartiteMatching bm = max_bipartite_matching(u1.size(), u2.size(), aux.adjacency);
  if (bm.size < u1.size()) {
    std::vector<Vertex> hall;
    for (std::size_t i : hall_violator(aux.adjacency, bm)) hall.push_back(u1[i]);
    std::sort(hall.begin(), hall.end());
    throw NoMatching(std::move(hall));
  }
  const VertexMask m1(h.n(), u1);
  PairMatching out;
  for (std::size_t i = 0; i < u1.size(); ++i) {
    const std::size_t j = static_cast<std::size_t>(bm.left_mate[i]);
    const auto& row = aux.adjacency[i];
    const std::size_t pos = static_cast<std::size_t>(std::find(row.begin(), row.end(), j) - row.begin());
    const EdgeId e = aux.witness[i][pos];
    std::size_t in1 = 0;
    for (Vertex v : h.edge(e)) in1 += m1[v];
    out.pairs.push_back({u1[i], u2[j], e, in1 == 1 ? EdgePattern::one_rest : EdgePattern::rest_one});
  }
  const std::string problem = check_pair_matching(h, u1, u2, out, one_sided);
  if (!problem.empty()) throw std::logic_error("matching invariant broken: " + problem);
  return out;
}

}  // namespace

NoMatching::NoMatching(std::vector<Vertex> hall_set)
    : std::runtime_error("no saturating matching; Hall-violating set {" + join(hall_set) + "}"),
      hall_set_(std::move(hall_set)) {}

AuxiliaryGraph auxiliary_graph(const Hypergraph& h, std::span<const Vertex> u1,
                               std::span<const Vertex> u2, bool one_sided,
                               const EdgeLedger* exclude) {
  const auto idx1 = index_of(u1);
  const auto idx2 = index_of(u2);
  const unsigned r = h.r();
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> cand(u1.size());
  std::vector<std::size_t> in1, in2;
  for (std::size_t i = 0; i < u1.size(); ++i) {
    for (EdgeId e : h.incident(u1[i])) {
      if (exclude && exclude->contains(e)) continue;
      in1.clear();
      in2.clear();
      for (Vertex v : h.edge(e)) {
        if (auto it = idx1.find(v); it != idx1.end()) {
          in1.push_back(it->second);
        } else if (auto jt = idx2.find(v); jt != idx2.end()) {
          in2.push_back(jt->second);
        }
      }
      if (in1.front() != i) continue;  // handle each edge once, from its first U1 vertex
      if (in1.size() + in2.size() != r) continue;
      if (in1.size() == 1) {
        for (std::size_t j : in2) cand[i].emplace_back(j, e);
      } else if (in2.size() == 1 && !one_sided) {
        for (std::size_t a : in1) cand[a].emplace_back(in2.front(), e);
      }
    }
  }
  AuxiliaryGraph aux;
  aux.adjacency.resize(u1.size());
  aux.witness.resize(u1.size());
  for (std::size_t i = 0; i < u1.size(); ++i) {
    auto& c = cand[i];
    std::sort(c.begin(), c.end());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0 && c[k].first == c[k - 1].first) continue;  // smallest edge id wins
      aux.adjacency[i].push_back(c[k].first);
      aux.witness[i].push_back(c[k].second);
    }
  }
  return aux;
}

PairMatching find_U1U2_matching(const Hypergraph& h, std::span<const Vertex> u1,
                                std::span<const Vertex> u2, const EdgeLedger* exclude) {
  return match_impl(h, u1, u2, false, exclude);
}

PairMatching find_one_sided_matching(const Hypergraph& h, std::span<const Vertex> u1,
                                     std::span<const Vertex> u2, const EdgeLedger* exclude) {
  return match_impl(h, u1, u2, true, exclude);
}

TwoMatching find_two_matching(const Hypergraph& h, std::span<const Vertex> a,
                              std::span<const Vertex> b, std::uint64_t seed,
                              const EdgeLedger* exclude, const TwoMatchingOptions& opts) {
  check_disjoint(h.n(), a, b);
  if (a.empty()) return {};
  const std::size_t half = b.size() / 2;
  const double density = measured_density(h, b, a);
  std::optional<NoMatching> last;
  for (int attempt = 0; attempt < std::max(1, opts.attempts); ++attempt) {
    const std::uint64_t s = Rng::derive(seed, static_cast<std::uint64_t>(attempt));
    const std::vector<Vertex> b1 =
        sample_inheriting_subset(h, b, half, a, density, opts.slack, opts.attempts, s);
    const VertexMask m1(h.n(), b1);
    std::vector<Vertex> b2;
    for (Vertex v : b) {
      if (!m1[v]) b2.push_back(v);
    }
    try {
      const PairMatching first = find_one_sided_matching(h, a, b1, exclude);
      const PairMatching second = find_one_sided_matching(h, a, b2, exclude);
      TwoMatching out;
      for (std::size_t i = 0; i < a.size(); ++i) {
        out.entries.push_back({a[i], first.pairs[i].edge, second.pairs[i].edge, first.pairs[i].b,
                               second.pairs[i].b});
      }
      const std::string problem = check_two_matching(h, a, b, out);
      if (!problem.empty()) throw std::logic_error("2-matching invariant broken: " + problem);
      return out;
    } catch (const NoMatching& err) {
      last = err;
    }
  }
  throw *last;
}

std::string check_pair_matching(const Hypergraph& h, std::span<const Vertex> u1,
                                std::span<const Vertex> u2, const PairMatching& m,
                                bool one_sided) {
  const VertexMask m1(h.n(), u1);
  const VertexMask m2(h.n(), u2);
  std::set<Vertex> as, bs;
  std::set<EdgeId> es;
  for (const auto& p : m.pairs) {
    if (!m1[p.a]) return "a-vertex " + std::to_string(p.a) + " not in U1";
    if (!m2[p.b]) return "b-vertex " + std::to_string(p.b) + " not in U2";
    if (!as.insert(p.a).second) return "a-vertex " + std::to_string(p.a) + " repeated";
    if (!bs.insert(p.b).second) return "b-vertex " + std::to_string(p.b) + " repeated";
    if (p.edge >= h.num_edges()) return "edge id out of range";
    if (!es.insert(p.edge).second) return "edge " + std::to_string(p.edge) + " repeated";
    if (!h.contains(p.edge, p.a) || !h.contains(p.edge, p.b)) {
      return "edge " + std::to_string(p.edge) + " misses its endpoints";
    }
    std::size_t in1 = 0, in2 = 0;
    for (Vertex v : h.edge(p.edge)) {
      in1 += m1[v];
      in2 += m2[v];
    }
    if (in1 + in2 != h.r()) return "edge " + std::to_string(p.edge) + " leaves U1 u U2";
    const bool ok = p.pattern == EdgePattern::one_rest ? in1 == 1 : in2 == 1;
    if (!ok) return "edge " + std::to_string(p.edge) + " does not match its pattern";
    if (one_sided && p.pattern != EdgePattern::one_rest) return "pattern (r-1,1) in one-sided matching";
  }
  if (as.size() != u1.size()) return "U1 not saturated";
  return {};
}

std::string check_two_matching(const Hypergraph& h, std::span<const Vertex> a,
                               std::span<const Vertex> b, const TwoMatching& m) {
  const VertexMask ma(h.n(), a);
  const VertexMask mb(h.n(), b);
  std::set<Vertex> sources, images;
  std::set<EdgeId> edges;
  auto check_edge = [&](Vertex src, EdgeId g, Vertex tau) -> std::string {
    if (g >= h.num_edges()) return "edge id out of range";
    if (!edges.insert(g).second) return "edge " + std::to_string(g) + " repeated";
    if (!h.contains(g, src)) return "edge " + std::to_string(g) + " misses its source";
    if (!mb[tau] || !h.contains(g, tau)) return "tau image outside B or outside its edge";
    if (!images.insert(tau).second) return "tau not injective";
    std::size_t ina = 0, inb = 0;
    for (Vertex v : h.edge(g)) {
      ina += ma[v];
      inb += mb[v];
    }
    if (ina != 1 || inb != h.r() - 1) return "edge " + std::to_string(g) + " is not a (1,r-1)-edge";
    return {};
  };
  for (const auto& e : m.entries) {
    if (!ma[e.a]) return "source outside A";
    if (!sources.insert(e.a).second) return "source repeated";
    if (auto s = check_edge(e.a, e.e, e.tau_e); !s.empty()) return s;
    if (auto s = check_edge(e.a, e.f, e.tau_f); !s.empty()) return s;
  }
  if (sources.size() != a.size()) return "A not covered";
  return {};
}

}  // namespace berge
