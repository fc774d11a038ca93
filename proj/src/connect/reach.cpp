#include <algorithm>
#include <set>
#include <string>

#include "berge/connect.hpp"
#include "berge/internal/routing.hpp"

namespace berge {

EmptyLayer::EmptyLayer(std::size_t layer)
    : std::runtime_error("layer " + std::to_string(layer) + " of the layered search is empty"),
      layer_(layer) {}

Exhausted::Exhausted(std::size_t found)
    : std::runtime_error("path system exhausted after " + std::to_string(found) + " paths"),
      found_(found) {}

ExpandResult expand_step(const Hypergraph& h, std::span<const Vertex> u1,
                         std::span<const Vertex> u2, std::span<const Vertex> t1, double gamma,
                         const EdgeLedger* exclude) {
  const VertexMask m1(h.n(), u1);
  const VertexMask m2(h.n(), u2);
  for (Vertex v : u2) {
    if (m1[v]) throw ParameterError("U1 and U2 overlap");
  }
  std::vector<Vertex> sources(t1.begin(), t1.end());
  std::sort(sources.begin(), sources.end());
  std::vector<EdgeId> witness(h.n(), kNoEdge);
  for (Vertex a : sources) {
    if (!m1[a]) throw ParameterError("T1 must lie inside U1");
    for (EdgeId e : h.incident(a)) {
      if (exclude && exclude->contains(e)) continue;
      const auto ed = h.edge(e);
      if (!std::all_of(ed.begin(), ed.end(), [&](Vertex w) { return w == a || m2[w]; })) continue;
      for (Vertex b : ed) {
        if (b != a && witness[b] == kNoEdge) witness[b] = e;
      }
    }
  }
  ExpandResult out;
  for (Vertex b = 0; b < h.n(); ++b) {
    if (witness[b] != kNoEdge) {
      out.t2.push_back(b);
      out.witness.push_back(witness[b]);
    }
  }
  out.meets_threshold = static_cast<double>(out.t2.size()) >=
                        (0.5 + gamma) * static_cast<double>(u2.size());
  return out;
}

bool LayeredReach::reaches(std::size_t layer, Vertex v) const {
  const auto& l = layers.at(layer);
  return std::binary_search(l.begin(), l.end(), v);
}

BergePath LayeredReach::extract_path(Vertex v) const { return extract_path(layers.size() - 1, v); }

BergePath LayeredReach::extract_path(std::size_t layer, Vertex v) const {
  BergePath out;
  Vertex cur = v;
  for (std::size_t i = layer + 1; i-- > 0;) {
    const auto& l = layers[i];
    const auto it = std::lower_bound(l.begin(), l.end(), cur);
    if (it == l.end() || *it != cur) throw ParameterError("vertex not reached in this layer");
    out.vertices.push_back(cur);
    if (i == 0) break;
    const Back& back = predecessors[i][static_cast<std::size_t>(it - l.begin())];
    out.edges.push_back(back.edge);
    cur = back.prev;
  }
  std::reverse(out.vertices.begin(), out.vertices.end());
  std::reverse(out.edges.begin(), out.edges.end());
  out.is_berge = true;
  return out;
}

LayeredReach robust_connect(const Hypergraph& h, const std::vector<std::vector<Vertex>>& blocks,
                            const std::vector<std::vector<Vertex>>& allowed,
                            const EdgeLedger* exclude) {
  if (blocks.empty() || blocks.size() != allowed.size()) {
    throw ParameterError("need one allowed set per block");
  }
  std::vector<int> owner(h.n(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Vertex v : blocks[i]) {
      if (v >= h.n()) throw ParameterError("vertex out of range");
      if (owner[v] != -1) throw ParameterError("blocks overlap");
      owner[v] = static_cast<int>(i);
    }
    for (Vertex v : allowed[i]) {
      if (v >= h.n() || owner[v] != static_cast<int>(i)) {
        throw ParameterError("allowed set escapes its block");
      }
    }
  }
  LayeredReach reach;
  std::vector<Vertex> first(allowed[0]);
  std::sort(first.begin(), first.end());
  first.erase(std::unique(first.begin(), first.end()), first.end());
  if (first.empty()) throw EmptyLayer(1);
  reach.layers.push_back(first);
  reach.predecessors.emplace_back(first.size());

  std::set<EdgeId> used;
  std::vector<LayeredReach::Back> back(h.n());
  std::vector<char> ok(h.n(), 0);
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    const int next = static_cast<int>(i + 1);
    std::fill(ok.begin(), ok.end(), 0);
    for (Vertex v : allowed[i + 1]) ok[v] = 1;
    std::vector<Vertex> layer;
    for (Vertex x : reach.layers[i]) {
      for (EdgeId e : h.incident(x)) {
        if (exclude && exclude->contains(e)) continue;
        const auto ed = h.edge(e);
        if (!std::all_of(ed.begin(), ed.end(),
                         [&](Vertex w) { return w == x || owner[w] == next; })) {
          continue;
        }
        for (Vertex y : ed) {
          if (y == x || ok[y] != 1) continue;
          ok[y] = 2;
          back[y] = {x, e};
          layer.push_back(y);
          used.insert(e);
        }
      }
    }
    if (layer.empty()) throw EmptyLayer(i + 2);
    std::sort(layer.begin(), layer.end());
    std::vector<LayeredReach::Back> preds;
    preds.reserve(layer.size());
    for (Vertex y : layer) preds.push_back(back[y]);
    reach.layers.push_back(std::move(layer));
    reach.predecessors.push_back(std::move(preds));
  }
  reach.used_edges.assign(used.begin(), used.end());
  return reach;
}

std::string PathSystem::check(const Hypergraph& h) const {
  if (paths.size() != pairing.size()) return "pairing table size differs from path count";
  std::set<EdgeId> edges;
  std::set<Vertex> inner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const BergePath& p = paths[i];
    const WalkReport rep = validate_walk(h, p, WalkMode::berge);
    if (!rep.valid) return "path " + std::to_string(i) + ": " + rep.first_violation;
    const auto [a, b] = pairing[i];
    if (p.closed) {
      if (a != b || p.front() != a) return "cycle " + std::to_string(i) + " not anchored at its pair";
    } else if (p.front() != a || p.back() != b) {
      return "path " + std::to_string(i) + " endpoints differ from its pair";
    }
    for (EdgeId e : p.edges) {
      if (!edges.insert(e).second) return "edge " + std::to_string(e) + " shared between paths";
    }
    const std::size_t first = 1;
    const std::size_t last = p.closed ? p.vertices.size() : p.vertices.size() - 1;
    for (std::size_t j = first; j < last; ++j) {
      if (!inner.insert(p.vertices[j]).second) {
        return "inner vertex " + std::to_string(p.vertices[j]) + " shared between paths";
      }
    }
  }
  if (std::vector<Vertex>(inner.begin(), inner.end()) != used_inner) return "usedInner out of sync";
  if (std::vector<EdgeId>(edges.begin(), edges.end()) != used_edges) return "usedEdges out of sync";
  return {};
}

namespace detail {

std::optional<BergePath> route_pair(const Hypergraph& h, Vertex a, Vertex b,
                                    const std::vector<std::vector<Vertex>>& blocks,
                                    const VertexMask& blocked, const EdgeLedger* exclude) {
  const std::size_t k = blocks.size();
  if (k == 0) {
    if (a == b) return std::nullopt;
    for (EdgeId e : h.incident(a)) {
      if (exclude && exclude->contains(e)) continue;
      if (h.contains(e, b)) return BergePath{{a, b}, {e}, false, true};
    }
    return std::nullopt;
  }
  auto free_part = [&](const std::vector<Vertex>& block) {
    std::vector<Vertex> out;
    for (Vertex v : block) {
      if (!blocked[v]) out.push_back(v);
    }
    return out;
  };
  const std::size_t t = (k + 1) / 2;
  std::vector<std::vector<Vertex>> fb{{a}}, fa{{a}}, bb{{b}}, ba{{b}};
  for (std::size_t i = 0; i < t; ++i) {
    fb.push_back(blocks[i]);
    fa.push_back(free_part(blocks[i]));
  }
  for (std::size_t i = k; i-- > t - 1;) {
    bb.push_back(blocks[i]);
    ba.push_back(free_part(blocks[i]));
  }
  LayeredReach fwd, bwd;
  try {
    fwd = robust_connect(h, fb, fa, exclude);
    bwd = robust_connect(h, bb, ba, exclude);
  } catch (const EmptyLayer&) {
    return std::nullopt;
  }
  const auto& lf = fwd.layers.back();
  const auto& lb = bwd.layers.back();
  std::vector<Vertex> meet;
  std::set_intersection(lf.begin(), lf.end(), lb.begin(), lb.end(), std::back_inserter(meet));
  for (Vertex v : meet) {
    BergePath path = fwd.extract_path(v);
    path.append(bwd.extract_path(v).reversed());
    if (a == b) {
      path.vertices.pop_back();
      path.closed = true;
    }
    if (validate_walk(h, path, WalkMode::berge).valid) {
      path.is_berge = true;
      return path;
    }
  }
  return std::nullopt;
}

RouteOutcome route_pairs(const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                         const std::vector<std::size_t>& group,
                         const std::vector<std::vector<Vertex>>& blocks, std::size_t count,
                         EdgeLedger& ledger) {
  RouteOutcome out;
  out.path_of.assign(pairs.size(), -1);
  VertexMask blocked(h.n());
  std::set<std::size_t> done_groups;
  std::size_t found = 0;
  for (std::size_t i = 0; i < pairs.size() && found < count; ++i) {
    const std::size_t g = group.empty() ? i : group[i];
    if (done_groups.count(g)) continue;
    auto path = route_pair(h, pairs[i].first, pairs[i].second, blocks, blocked, &ledger);
    if (!path) continue;
    const std::size_t last = path->closed ? path->vertices.size() : path->vertices.size() - 1;
    for (std::size_t j = 1; j < last; ++j) blocked.set(path->vertices[j]);
    for (EdgeId e : path->edges) ledger.add(e);
    out.path_of[i] = static_cast<int>(out.paths.size());
    out.paths.push_back(std::move(*path));
    done_groups.insert(g);
    ++found;
  }
  return out;
}

}  // namespace detail

PathSystem build_path_system(const Hypergraph& h, std::span<const Vertex> a,
                             std::span<const Vertex> b,
                             const std::vector<std::vector<Vertex>>& blocks, double gamma,
                             std::size_t count, EdgeLedger* ledger) {
  (void)gamma;
  if (a.size() != b.size()) throw ParameterError("A and B must have equal size");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[i]);
  EdgeLedger local;
  EdgeLedger& led = ledger ? *ledger : local;
  const detail::RouteOutcome routed = detail::route_pairs(h, pairs, {}, blocks, count, led);
  PathSystem sys;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (routed.path_of[i] < 0) continue;
    sys.paths.push_back(routed.paths[static_cast<std::size_t>(routed.path_of[i])]);
    sys.pairing.push_back(pairs[i]);
  }
  detail::fill_usage(sys);
  if (sys.paths.size() < count) throw Exhausted(sys.paths.size());
  return sys;
}

namespace detail {

void fill_usage(PathSystem& sys) {
  std::set<Vertex> inner;
  std::set<EdgeId> edges;
  for (const BergePath& p : sys.paths) {
    const std::size_t last = p.closed ? p.vertices.size() : p.vertices.size() - 1;
    for (std::size_t j = 1; j < last; ++j) inner.insert(p.vertices[j]);
    edges.insert(p.edges.begin(), p.edges.end());
  }
  sys.used_inner.assign(inner.begin(), inner.end());
  sys.used_edges.assign(edges.begin(), edges.end());
}

}  // namespace detail

}  // namespace berge
