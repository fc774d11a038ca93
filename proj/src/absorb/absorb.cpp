#include "berge/absorb.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "berge/internal/routing.hpp"
#include "berge/rng.hpp"

namespace berge {

StageError::StageError(std::string stage, const std::string& cause)
    : std::runtime_error(stage + ": " + cause), stage_(std::move(stage)) {}

AbsorberConfig AbsorberConfig::standard() {
  AbsorberConfig cfg;
  cfg.cycles.parity = Parity::odd;
  cfg.cycles.fixed_log = 2;
  cfg.chords.parity = Parity::even;
  cfg.chords.fixed_log = -1;
  return cfg;
}

std::string check_absorber(const Hypergraph& h, const Absorber& a) {
  const BergePath& c = a.cycle;
  if (!c.closed) return "cycle is not closed";
  if (c.vertices.empty() || c.vertices[0] != a.u) return "cycle does not start at u";
  const std::size_t len = c.vertices.size();
  if (len % 2 == 0) return "cycle length is even";
  if (len < 5) return "cycle shorter than 5";
  const WalkReport rep = validate_walk(h, c, WalkMode::berge);
  if (!rep.valid) return "cycle: " + rep.first_violation;
  const unsigned t = a.t();
  if (a.chords.size() != t - 1) return "expected " + std::to_string(t - 1) + " chords";

  std::set<EdgeId> edges(c.edges.begin(), c.edges.end());
  std::set<Vertex> vertices(c.vertices.begin(), c.vertices.end());
  for (unsigned i = 1; i < t; ++i) {
    const BergePath& p = a.chords[i - 1];
    const WalkReport pr = validate_walk(h, p, WalkMode::berge);
    if (!pr.valid || p.closed) return "chord " + std::to_string(i) + ": " + pr.first_violation;
    if (p.front() != a.v(i + 1) || p.back() != a.v(2 * t + 1 - i)) {
      return "chord " + std::to_string(i) + " has wrong endpoints";
    }
    for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j) {
      if (!vertices.insert(p.vertices[j]).second) {
        return "chord " + std::to_string(i) + " reuses vertex " + std::to_string(p.vertices[j]);
      }
    }
    for (EdgeId e : p.edges) {
      if (!edges.insert(e).second) return "edge " + std::to_string(e) + " shared inside absorber";
    }
  }
  return {};
}

AbsorberTraversals absorber_traversals(const Hypergraph& h, const Absorber& a) {
  const std::string problem = check_absorber(h, a);
  if (!problem.empty()) throw ParameterError("malformed absorber: " + problem);
  const std::size_t t = a.t();
  // e(j) joins v_{j-1} and v_j, with v_0 = v_{2t+1} = u.
  auto e = [&](std::size_t j) { return a.cycle.edges[j - 1]; };
  auto chord_from = [&](std::size_t pos) {
    // Chord i joins v_{i+1} (left) and v_{2t+1-i} (right).
    if (pos <= t) return a.chords[pos - 2];
    return a.chords[2 * t - pos].reversed();
  };
  auto finish = [&](BergePath path, std::size_t cur) {
    bool chord_next = true;
    for (std::size_t guard = 0; cur != t + 1; ++guard) {
      if (guard > 4 * t) throw std::logic_error("absorber traversal did not terminate");
      if (chord_next) {
        path.append(chord_from(cur));
        cur = 2 * t + 2 - cur;
      } else if (cur <= t) {
        path.append(BergePath{{a.v(cur), a.v(cur + 1)}, {e(cur + 1)}, false, true});
        ++cur;
      } else {
        path.append(BergePath{{a.v(cur), a.v(cur - 1)}, {e(cur)}, false, true});
        --cur;
      }
      chord_next = !chord_next;
    }
    path.is_berge = validate_walk(h, path, WalkMode::berge).valid;
    if (!path.is_berge) throw std::logic_error("absorber traversal is not a Berge path");
    return path;
  };
  AbsorberTraversals out;
  out.with_u = finish(BergePath{{a.v(1), a.u, a.v(2 * t)}, {e(1), e(2 * t + 1)}, false, true}, 2 * t);
  out.without_u = finish(BergePath{{a.v(1), a.v(2)}, {e(2)}, false, true}, 2);
  return out;
}

namespace {

std::vector<Vertex> minus(std::span<const Vertex> from, const std::vector<Vertex>& drop,
                          std::size_t n) {
  const VertexMask mask(n, drop);
  std::vector<Vertex> out;
  for (Vertex v : from) {
    if (!mask[v]) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> carve(const Hypergraph& h, std::span<const Vertex> pool, double share,
                          std::span<const Vertex> demand, const AbsorberConfig& cfg,
                          std::uint64_t seed) {
  const auto size = std::min<std::size_t>(
      pool.size(), static_cast<std::size_t>(std::ceil(share * static_cast<double>(pool.size()))));
  SamplingOptions opts;
  opts.check_complement = pool.size() >= 2 * size;
  const double density = cfg.density_factor * measured_density(h, pool, demand);
  return sample_inheriting_subset(h, pool, size, demand, density, cfg.sample_slack,
                                  cfg.sample_attempts, seed, opts);
}

// connect_pairs over consecutive batches small enough that a round's blocks fit into
// what is left of the pool. Paths come back in pair order.
ConnectResult connect_batched(const Hypergraph& h,
                              const std::vector<std::pair<Vertex, Vertex>>& pairs,
                              std::span<const Vertex> pool, const ConnectConfig& cfg,
                              std::uint64_t seed, EdgeLedger& ledger) {
  ConnectResult out;
  out.unused_reservoir.assign(pool.begin(), pool.end());
  std::sort(out.unused_reservoir.begin(), out.unused_reservoir.end());
  std::size_t done = 0;
  for (std::uint64_t batch = 0; done < pairs.size(); ++batch) {
    const auto& rest = out.unused_reservoir;
    std::size_t g = pairs.size() - done;
    for (; g > 0; --g) {
      std::vector<Vertex> demand;
      for (std::size_t i = done; i < done + g; ++i) {
        demand.push_back(pairs[i].first);
        demand.push_back(pairs[i].second);
      }
      std::sort(demand.begin(), demand.end());
      demand.erase(std::unique(demand.begin(), demand.end()), demand.end());
      if (cfg.blocks_per_round(g) * planned_block_size(h, rest, demand, g, cfg) <= rest.size()) break;
    }
    if (g == 0) throw std::runtime_error("reservoir exhausted before pair " + std::to_string(done));
    const std::vector<std::pair<Vertex, Vertex>> part(pairs.begin() + static_cast<std::ptrdiff_t>(done),
                                                      pairs.begin() + static_cast<std::ptrdiff_t>(done + g));
    ConnectResult r = connect_pairs(h, part, rest, cfg, Rng::derive(seed, batch), &ledger);
    for (auto& p : r.system.paths) out.system.paths.push_back(std::move(p));
    out.system.pairing.insert(out.system.pairing.end(), part.begin(), part.end());
    out.unused_reservoir = std::move(r.unused_reservoir);
    done += g;
  }
  detail::fill_usage(out.system);
  return out;
}

}  // namespace

AbsorberBuild build_absorbers(const Hypergraph& h, std::span<const Vertex> z,
                              std::span<const Vertex> y, const AbsorberConfig& cfg,
                              std::uint64_t seed, EdgeLedger* ledger) {
  const VertexMask zmask(h.n(), z);
  for (Vertex v : y) {
    if (v >= h.n() || zmask[v]) throw ParameterError("Z and Y must be disjoint");
  }
  AbsorberBuild out;
  if (z.empty()) {
    out.remaining.assign(y.begin(), y.end());
    std::sort(out.remaining.begin(), out.remaining.end());
    return out;
  }
  EdgeLedger local(h.num_edges());
  EdgeLedger& led = ledger ? *ledger : local;
  std::vector<Vertex> zs(z.begin(), z.end());
  std::sort(zs.begin(), zs.end());

  ConnectConfig cyc = cfg.cycles;
  cyc.parity = Parity::odd;
  // At least four blocks, so every cycle has length >= 5.
  if (cyc.fixed_log != 0) {
    cyc.fixed_log = std::max(cyc.fixed_log, 2);
  } else {
    cyc.min_log = std::max(cyc.min_log, 2u);
  }

  std::vector<Vertex> u1;
  ConnectResult cycles;
  try {
    u1 = carve(h, y, cfg.cycle_share, zs, cfg, Rng::derive(seed, 1));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u : zs) pairs.emplace_back(u, u);
    cycles = connect_batched(h, pairs, u1, cyc, Rng::derive(seed, 2), led);
  } catch (const std::exception& err) {
    throw StageError("absorber-cycles", err.what());
  }

  std::vector<std::pair<Vertex, Vertex>> chord_pairs;
  std::vector<Vertex> chord_ends;
  for (const BergePath& c : cycles.system.paths) {
    const std::size_t t = (c.vertices.size() - 1) / 2;
    for (std::size_t i = 1; i < t; ++i) {
      chord_pairs.emplace_back(c.vertices[i + 1], c.vertices[2 * t + 1 - i]);
      chord_ends.push_back(c.vertices[i + 1]);
      chord_ends.push_back(c.vertices[2 * t + 1 - i]);
    }
  }
  const std::vector<Vertex> after_u1 = minus(y, u1, h.n());
  std::vector<Vertex> u2;
  ConnectResult chords;
  try {
    u2 = carve(h, after_u1, cfg.chord_share / std::max(1e-9, 1.0 - cfg.cycle_share), chord_ends, cfg,
               Rng::derive(seed, 3));
    chords = connect_batched(h, chord_pairs, u2, cfg.chords, Rng::derive(seed, 4), led);
  } catch (const std::exception& err) {
    throw StageError("absorber-chords", err.what());
  }

  std::size_t next_chord = 0;
  std::vector<Vertex> used;
  for (const BergePath& c : cycles.system.paths) {
    Absorber a;
    a.u = c.vertices[0];
    a.cycle = c;
    const std::size_t t = (c.vertices.size() - 1) / 2;
    for (std::size_t i = 1; i < t; ++i) a.chords.push_back(chords.system.paths[next_chord++]);
    const std::string problem = check_absorber(h, a);
    if (!problem.empty()) throw std::logic_error("built absorber is malformed: " + problem);
    used.insert(used.end(), c.vertices.begin(), c.vertices.end());
    out.absorbers.push_back(std::move(a));
  }
  used.insert(used.end(), chords.system.used_inner.begin(), chords.system.used_inner.end());
  out.remaining = minus(y, used, h.n());
  return out;
}

AbsorbingPath assemble_absorbing_path(const Hypergraph& h, std::vector<Absorber> absorbers,
                                      std::span<const Vertex> y_rest, const ConnectConfig& cfg,
                                      std::uint64_t seed, EdgeLedger* ledger) {
  if (absorbers.empty()) throw ParameterError("need at least one absorber");
  AbsorbingPath p;
  p.absorbers = std::move(absorbers);
  for (const Absorber& a : p.absorbers) {
    p.traversals.push_back(absorber_traversals(h, a));
    p.reservoir.push_back(a.u);
  }
  std::sort(p.reservoir.begin(), p.reservoir.end());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < p.absorbers.size(); ++i) {
    pairs.emplace_back(p.absorbers[i].main_endpoints().second,
                       p.absorbers[i + 1].main_endpoints().first);
  }
  try {
    ConnectResult res = connect_pairs(h, pairs, y_rest, cfg, seed, ledger);
    p.connectors = std::move(res.system.paths);
    p.unused = std::move(res.unused_reservoir);
  } catch (const std::exception& err) {
    throw StageError("absorbing-path", err.what());
  }
  p.endpoints = {p.absorbers.front().main_endpoints().first,
                 p.absorbers.back().main_endpoints().second};
  const BergePath skeleton = materialize(p, {});
  const WalkReport rep = validate_walk(h, skeleton, WalkMode::berge);
  if (!rep.valid) throw std::logic_error("absorbing path is not a Berge path: " + rep.first_violation);
  return p;
}

BergePath materialize(const AbsorbingPath& p, std::span<const Vertex> absorbed) {
  std::vector<char> absorb(p.absorbers.size(), 0);
  for (Vertex z : absorbed) {
    const auto it = std::find_if(p.absorbers.begin(), p.absorbers.end(),
                                 [z](const Absorber& a) { return a.u == z; });
    if (it == p.absorbers.end()) {
      throw ParameterError("vertex " + std::to_string(z) + " is not in the reservoir");
    }
    absorb[static_cast<std::size_t>(it - p.absorbers.begin())] = 1;
  }
  BergePath out;
  for (std::size_t i = 0; i < p.absorbers.size(); ++i) {
    out.append(absorb[i] ? p.traversals[i].without_u : p.traversals[i].with_u);
    if (i < p.connectors.size()) out.append(p.connectors[i]);
  }
  out.is_berge = true;
  return out;
}

}  // namespace berge
