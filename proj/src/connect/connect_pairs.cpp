#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "berge/connect.hpp"
#include "berge/internal/routing.hpp"
#include "berge/matching.hpp"
#include "berge/rng.hpp"

namespace berge {

RoundFailed::RoundFailed(unsigned round, std::string cause)
    : std::runtime_error("connection round " + std::to_string(round) + " failed: " + cause),
      round_(round),
      cause_(std::move(cause)) {}

void ConnectConfig::validate(unsigned r) const {
  const double cap = std::pow(2.0, 1.0 - static_cast<double>(r));
  if (!(gamma > 0.0 && gamma < cap)) {
    throw ParameterError("gamma must lie in (0, 2^(1-r))");
  }
  if (min_block_size < r) throw ParameterError("min block size must be at least r");
  if (!(block_scale > 0.0)) throw ParameterError("block scale must be positive");
  if (!(pool_factor >= 2.0)) throw ParameterError("pool factor must be at least 2");
}

unsigned ConnectConfig::log_length(std::size_t pairs) const {
  if (fixed_log < 0) return 0;
  if (fixed_log > 0) return static_cast<unsigned>(fixed_log);
  const unsigned lg = pairs <= 1 ? 0u : static_cast<unsigned>(std::floor(std::log2(pairs)));
  return std::max(min_log, lg);
}

unsigned ConnectConfig::rounds(std::size_t pairs) const {
  if (max_rounds > 0) return max_rounds;
  const unsigned lg = pairs <= 1 ? 0u : static_cast<unsigned>(std::ceil(std::log2(pairs)));
  return std::max(1u, lg) + 1;
}

std::size_t ConnectConfig::blocks_per_round(std::size_t pairs) const {
  return 2 * log_length(pairs) + (parity == Parity::even ? 1 : 0);
}

std::pair<std::size_t, std::size_t> ConnectConfig::length_window(std::size_t pairs) const {
  const std::size_t shortest = blocks_per_round(pairs) + 1;
  return {shortest, shortest + 2 * (rounds(pairs) - 1)};
}

namespace {

struct Live {
  std::size_t original;
  std::vector<BergePath> from_a;  // prefixes a_i ... x
  std::vector<BergePath> from_b;  // prefixes b_i ... y
};

std::vector<Vertex> minus(const std::vector<Vertex>& from, const VertexMask& drop) {
  std::vector<Vertex> out;
  for (Vertex v : from) {
    if (!drop[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

std::size_t size_for_edges(unsigned r, double density, double edges, std::size_t cap) {
  std::size_t s = r;
  while (s < cap && density * binom(static_cast<double>(s - 1), r - 1) < edges) ++s;
  return s;
}

std::size_t planned_block_size(const Hypergraph& h, std::span<const Vertex> pool,
                               std::span<const Vertex> demand, std::size_t tries,
                               const ConnectConfig& cfg) {
  std::size_t size = std::max(
      cfg.min_block_size,
      static_cast<std::size_t>(std::ceil(cfg.block_scale * static_cast<double>(tries))));
  if (cfg.min_block_edges > 0.0) {
    size = std::max(size, size_for_edges(h.r(), measured_density(h, pool, demand),
                                         cfg.min_block_edges, pool.size()));
  }
  return size;
}

namespace {

// Replaces every prefix by its two extensions through a 2-matching into a fresh pool.
void double_side(const Hypergraph& h, std::vector<Live>& live, bool side_a,
                 std::vector<Vertex>& reservoir, const ConnectConfig& cfg, std::uint64_t seed,
                 EdgeLedger& ledger, Rng& rng) {
  std::vector<Vertex> sources;
  for (const Live& l : live) {
    for (const BergePath& p : side_a ? l.from_a : l.from_b) sources.push_back(p.back());
  }
  std::size_t pool_size =
      static_cast<std::size_t>(std::ceil(cfg.pool_factor * static_cast<double>(sources.size())));
  if (cfg.min_block_edges > 0.0) {
    // The 2-matching splits the pool in half; each half must carry the edge floor.
    pool_size = std::max(pool_size, 2 * size_for_edges(h.r(), measured_density(h, reservoir, sources),
                                                       cfg.min_block_edges, reservoir.size()));
  }
  if (reservoir.size() < pool_size) throw std::runtime_error("reservoir exhausted while doubling");
  std::vector<Vertex> pool = rng.sample(std::span<const Vertex>(reservoir), pool_size);
  std::sort(pool.begin(), pool.end());
  const TwoMatching tm = find_two_matching(h, sources, pool, seed, &ledger);
  VertexMask taken(h.n());
  for (const auto& e : tm.entries) {
    ledger.add(e.e);
    ledger.add(e.f);
    taken.set(e.tau_e);
    taken.set(e.tau_f);
  }
  reservoir = minus(reservoir, taken);
  std::size_t k = 0;
  for (Live& l : live) {
    auto& prefixes = side_a ? l.from_a : l.from_b;
    std::vector<BergePath> next;
    for (const BergePath& p : prefixes) {
      const auto& entry = tm.entries[k++];
      for (const auto& [edge, tau] : {std::pair{entry.e, entry.tau_e}, std::pair{entry.f, entry.tau_f}}) {
        BergePath q = p;
        q.vertices.push_back(tau);
        q.edges.push_back(edge);
        next.push_back(std::move(q));
      }
    }
    prefixes = std::move(next);
  }
}

}  // namespace

ConnectResult connect_pairs(const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                            std::span<const Vertex> reservoir, const ConnectConfig& cfg,
                            std::uint64_t seed, EdgeLedger* ledger) {
  cfg.validate(h.r());
  ConnectResult result;
  const VertexMask in_reservoir(h.n(), reservoir);
  for (const auto& [a, b] : pairs) {
    if (a >= h.n() || b >= h.n()) throw ParameterError("endpoint out of range");
    if (in_reservoir[a] || in_reservoir[b]) throw ParameterError("endpoint inside the reservoir");
  }
  std::vector<Vertex> pool(reservoir.begin(), reservoir.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pairs.empty()) {
    result.unused_reservoir = pool;
    return result;
  }

  const std::size_t m = pairs.size();
  const double lg = std::log2(static_cast<double>(m));
  result.budget_warning = static_cast<double>(pool.size()) <
                          cfg.budget_scale * (3.0 / cfg.gamma) * static_cast<double>(m) * lg * lg;

  EdgeLedger work = ledger ? *ledger : EdgeLedger(h.num_edges());
  std::vector<Live> live;
  for (std::size_t i = 0; i < m; ++i) {
    live.push_back({i, {BergePath{{pairs[i].first}, {}, false, true}},
                    {BergePath{{pairs[i].second}, {}, false, true}}});
  }
  std::vector<BergePath> done(m);
  result.connected_in_round.assign(m, 0);
  const std::size_t k = cfg.blocks_per_round(m);
  const unsigned max_rounds = cfg.rounds(m);
  Rng rng(Rng::derive(seed, 0x636f6e6e));

  for (unsigned round = 1; round <= max_rounds && !live.empty(); ++round) {
    result.rounds_used = round;
    std::vector<std::pair<Vertex, Vertex>> tries;
    std::vector<std::size_t> group;
    std::vector<std::pair<std::size_t, std::size_t>> origin;  // (live index, prefix index)
    std::vector<Vertex> demand;
    for (std::size_t li = 0; li < live.size(); ++li) {
      for (std::size_t q = 0; q < live[li].from_a.size(); ++q) {
        tries.emplace_back(live[li].from_a[q].back(), live[li].from_b[q].back());
        group.push_back(li);
        origin.emplace_back(li, q);
        demand.push_back(tries.back().first);
        demand.push_back(tries.back().second);
      }
    }
    std::sort(demand.begin(), demand.end());
    demand.erase(std::unique(demand.begin(), demand.end()), demand.end());

    const std::size_t block_size = planned_block_size(h, pool, demand, tries.size(), cfg);
    std::vector<std::vector<Vertex>> blocks;
    try {
      for (std::size_t j = 0; j < k; ++j) {
        if (pool.size() < block_size) throw std::runtime_error("reservoir exhausted");
        const double density = cfg.density_factor * measured_density(h, pool, demand);
        SamplingOptions opts;
        opts.check_complement = pool.size() >= 2 * block_size;
        blocks.push_back(sample_inheriting_subset(h, pool, block_size, demand, density,
                                                  cfg.inheritance_slack, cfg.max_sample_attempts,
                                                  Rng::derive(seed, round, j), opts));
        pool = minus(pool, VertexMask(h.n(), blocks.back()));
      }
    } catch (const std::exception& err) {
      throw RoundFailed(round, err.what());
    }

    const detail::RouteOutcome routed =
        detail::route_pairs(h, tries, group, blocks, tries.size(), work);

    VertexMask inner(h.n());
    std::vector<Live> still;
    std::vector<char> connected(live.size(), 0);
    for (std::size_t t = 0; t < tries.size(); ++t) {
      if (routed.path_of[t] < 0) continue;
      const auto [li, q] = origin[t];
      const BergePath& middle = routed.paths[static_cast<std::size_t>(routed.path_of[t])];
      const std::size_t orig = live[li].original;
      BergePath full = live[li].from_a[q];
      const BergePath& tail = live[li].from_b[q];
      if (middle.closed) {
        // Only possible for a one-vertex prefix on both sides, i.e. a round-1 cycle.
        full = middle;
      } else {
        full.append(middle);
        full.append(tail.reversed());
        if (pairs[orig].first == pairs[orig].second) {
          full.vertices.pop_back();
          full.closed = true;
        }
      }
      full.is_berge = true;
      const std::size_t last = full.closed ? full.vertices.size() : full.vertices.size() - 1;
      for (std::size_t j = 1; j < last; ++j) inner.set(full.vertices[j]);
      // Prefix edges were already reserved in the ledger by the doubling step.
      done[orig] = std::move(full);
      result.connected_in_round[orig] = round;
      connected[li] = 1;
    }
    // Unused block vertices and abandoned prefix vertices go back to the reservoir.
    for (const auto& block : blocks) {
      for (Vertex v : block) {
        if (!inner[v]) pool.push_back(v);
      }
    }
    for (std::size_t li = 0; li < live.size(); ++li) {
      if (!connected[li]) {
        still.push_back(std::move(live[li]));
        continue;
      }
      for (const auto* side : {&live[li].from_a, &live[li].from_b}) {
        for (const BergePath& p : *side) {
          for (std::size_t j = 1; j < p.vertices.size(); ++j) {
            if (!inner[p.vertices[j]]) pool.push_back(p.vertices[j]);
          }
        }
      }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    live = std::move(still);
    if (live.empty() || round == max_rounds) break;

    try {
      double_side(h, live, true, pool, cfg, Rng::derive(seed, round, 0x41), work, rng);
      double_side(h, live, false, pool, cfg, Rng::derive(seed, round, 0x42), work, rng);
    } catch (const std::exception& err) {
      throw RoundFailed(round, err.what());
    }
  }
  if (!live.empty()) {
    throw RoundFailed(result.rounds_used, Exhausted(m - live.size()).what());
  }

  result.system.paths = std::move(done);
  result.system.pairing = pairs;
  detail::fill_usage(result.system);
  const std::string problem = result.system.check(h);
  if (!problem.empty()) throw std::logic_error("connect_pairs produced an invalid system: " + problem);
  if (ledger) {
    for (EdgeId e : result.system.used_edges) {
      if (!ledger->add(e)) throw std::logic_error("ledger already held a path edge");
    }
  }
  const VertexMask used(h.n(), result.system.used_inner);
  for (Vertex v : reservoir) {
    if (!used[v]) result.unused_reservoir.push_back(v);
  }
  std::sort(result.unused_reservoir.begin(), result.unused_reservoir.end());
  result.unused_reservoir.erase(
      std::unique(result.unused_reservoir.begin(), result.unused_reservoir.end()),
      result.unused_reservoir.end());
  return result;
}

}  // namespace berge
