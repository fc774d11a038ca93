#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "berge/hamilton.hpp"
#include "berge/matching.hpp"
#include "berge/rng.hpp"

namespace berge {

PipelineConfig PipelineConfig::desk() {
  PipelineConfig cfg;
  cfg.absorber = AbsorberConfig::standard();
  cfg.absorber.cycle_share = 0.75;
  cfg.absorber.chord_share = 0.2;
  cfg.y_coef = 10.0;
  cfg.z_min_edges = 12.0;
  cfg.w_min_share = 0.1;
  cfg.attempts = 3;
  for (ConnectConfig* c : {&cfg.connector, &cfg.closing}) {
    c->parity = Parity::even;
    c->fixed_log = -1;
  }
  for (ConnectConfig* c : {&cfg.absorber.cycles, &cfg.absorber.chords, &cfg.connector, &cfg.closing}) {
    c->min_block_edges = 8.0;
    c->block_scale = 1.5;
  }
  cfg.absorber.cycles.block_scale = 1.3;
  return cfg;
}

PipelineConfig PipelineConfig::asymptotic() {
  PipelineConfig cfg;
  cfg.c1 = 4.0;
  cfg.y_coef = 9.0 / cfg.gamma;
  cfg.y_exp = 3.0;
  cfg.c2 = 7.0;
  cfg.absorber = AbsorberConfig::standard();
  cfg.absorber.cycles.fixed_log = 0;
  cfg.absorber.chords.parity = Parity::odd;
  cfg.absorber.chords.fixed_log = 0;
  return cfg;
}

PipelineConfig::Sizes PipelineConfig::resolve(std::size_t n, unsigned r, double density) const {
  if (n < 8) throw ParameterError("pipeline needs n >= 8");
  const double lg = std::log2(static_cast<double>(n));
  Sizes s;
  s.z = z_size ? z_size
               : std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(
                                              static_cast<double>(n) / std::pow(lg, c1))));
  if (!z_size && z_min_edges > 0.0) {
    s.z = std::max(s.z, size_for_edges(r, density, z_min_edges, n));
  }
  s.y = y_size ? y_size
               : static_cast<std::size_t>(
                     std::ceil(y_coef * static_cast<double>(s.z) * std::pow(lg, y_exp)));
  if (!y_size && w_min_share > 0.0) {
    const auto w_floor =
        static_cast<std::size_t>(std::ceil(w_min_share * static_cast<double>(n)));
    if (s.z + w_floor < n) s.y = std::min(s.y, n - s.z - w_floor);
  }
  if (s.z + s.y >= n) {
    throw ParameterError("|Z|=" + std::to_string(s.z) + " and |Y|=" + std::to_string(s.y) +
                         " leave no room for W at n=" + std::to_string(n));
  }
  s.w = n - s.z - s.y;
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Vertex> minus(const std::vector<Vertex>& from, const std::vector<Vertex>& drop,
                          std::size_t n) {
  const VertexMask mask(n, drop);
  std::vector<Vertex> out;
  for (Vertex v : from) {
    if (!mask[v]) out.push_back(v);
  }
  return out;
}

struct Cover {
  std::vector<BergePath> segments;
  std::size_t blocks = 0;
  std::size_t block_size = 0;
  std::size_t remainder = 0;
};

// Splits W into equal blocks plus a remainder and chains matchings between consecutive blocks.
Cover cover_w(const Hypergraph& h, const std::vector<Vertex>& w, const PipelineConfig& cfg,
              std::size_t segment_cap, EdgeLedger& ledger, std::uint64_t seed) {
  const std::size_t total = w.size();
  const double lg = std::log2(static_cast<double>(h.n()));
  const std::size_t block_cap =
      cfg.c2 > 0.0 ? std::max<std::size_t>(1, static_cast<std::size_t>(std::pow(lg, cfg.c2)))
                   : total;
  Rng rng(seed);
  std::string last_error = "W too small";
  for (std::size_t s = std::max<std::size_t>(1, cfg.w_min_block); s <= total; ++s) {
    std::size_t blocks = total / s;
    if (blocks > block_cap) continue;
    const std::size_t rem = total - blocks * s;
    if (s + rem > segment_cap) {
      if (s > segment_cap) break;
      continue;
    }
    for (int attempt = 0; attempt < std::max(1, cfg.cover_attempts); ++attempt) {
      std::vector<Vertex> order = w;
      rng.shuffle(order);
      std::vector<std::vector<Vertex>> parts(blocks);
      for (std::size_t b = 0; b < blocks; ++b) {
        parts[b].assign(order.begin() + static_cast<std::ptrdiff_t>(b * s),
                        order.begin() + static_cast<std::ptrdiff_t>((b + 1) * s));
      }
      EdgeLedger trial = ledger;
      std::vector<BergePath> paths(s);
      for (std::size_t i = 0; i < s; ++i) paths[i] = BergePath{{parts[0][i]}, {}, false, true};
      bool ok = true;
      for (std::size_t b = 0; b + 1 < blocks && ok; ++b) {
        std::vector<Vertex> tails;
        for (const BergePath& p : paths) tails.push_back(p.back());
        try {
          const PairMatching m = find_U1U2_matching(h, tails, parts[b + 1], &trial);
          for (std::size_t i = 0; i < s; ++i) {
            paths[i].vertices.push_back(m.pairs[i].b);
            paths[i].edges.push_back(m.pairs[i].edge);
            trial.add(m.pairs[i].edge);
          }
        } catch (const NoMatching& err) {
          last_error = err.what();
          ok = false;
        }
      }
      if (!ok) continue;
      Cover c;
      c.segments = std::move(paths);
      for (std::size_t i = blocks * s; i < total; ++i) {
        c.segments.push_back(BergePath{{order[i]}, {}, false, true});
      }
      c.blocks = blocks;
      c.block_size = s;
      c.remainder = rem;
      ledger = std::move(trial);
      return c;
    }
  }
  throw StageFailed("cover", last_error);
}

SolveResult attempt_once(const Hypergraph& h, const PipelineConfig& cfg) {
  const auto start = Clock::now();
  SolveResult res;
  res.mode = WalkMode::berge;
  auto stamp = Clock::now();
  auto record = [&](const std::string& stage, bool ok, const std::string& detail) {
    const auto now = Clock::now();
    res.stats.stages.push_back(
        {stage, ok, detail, std::chrono::duration<double, std::milli>(now - stamp).count()});
    stamp = now;
  };
  auto finish = [&](SolveStatus s) {
    res.status = s;
    res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return res;
  };

  const std::size_t n = h.n();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0u);
  const double min_density = measured_density(h, all, all);
  PipelineConfig::Sizes sizes;
  try {
    sizes = cfg.resolve(n, h.r(), min_density);
    cfg.absorber.cycles.validate(h.r());
    cfg.absorber.chords.validate(h.r());
    cfg.connector.validate(h.r());
    cfg.closing.validate(h.r());
  } catch (const ParameterError& err) {
    res.stats.precondition_met = false;
    res.stats.precondition = err.what();
    res.stats.failure = StageFailure{"config", err.what()};
    record("config", false, err.what());
    return finish(SolveStatus::precondition_failed);
  }
  res.stats.precondition = "|Z|=" + std::to_string(sizes.z) + " |Y|=" + std::to_string(sizes.y) +
                           " |W|=" + std::to_string(sizes.w);

  EdgeLedger ledger(h.num_edges());
  std::string stage = "carve";
  try {
    const double density = cfg.density_factor * min_density;
    auto carve = [&](const std::vector<Vertex>& pool, std::size_t m, std::uint64_t s) {
      SamplingOptions opts;
      opts.check_complement = pool.size() >= 2 * m;
      return sample_inheriting_subset(h, pool, m, all, density, cfg.sample_slack,
                                      cfg.sample_attempts, s, opts);
    };
    const std::vector<Vertex> z = carve(all, sizes.z, Rng::derive(cfg.seed, 1));
    const std::vector<Vertex> rest = minus(all, z, n);
    const std::vector<Vertex> y = carve(rest, sizes.y, Rng::derive(cfg.seed, 2));
    const std::vector<Vertex> w = minus(rest, y, n);
    record(stage, true, res.stats.precondition);

    stage = "absorbers";
    AbsorberBuild built;
    try {
      built = build_absorbers(h, z, y, cfg.absorber, Rng::derive(cfg.seed, 3), &ledger);
    } catch (const StageError& err) {
      throw StageFailed(err.stage(), err.what());
    }
    record(stage, true, std::to_string(built.absorbers.size()) + " absorbers");

    stage = "absorbing-path";
    AbsorbingPath pa;
    try {
      pa = assemble_absorbing_path(h, std::move(built.absorbers), built.remaining, cfg.connector,
                                   Rng::derive(cfg.seed, 4), &ledger);
    } catch (const StageError& err) {
      throw StageFailed(err.stage(), err.what());
    }
    record(stage, true, "skeleton of " + std::to_string(materialize(pa, {}).vertices.size()) + " vertices");

    stage = "cover";
    std::vector<Vertex> w_all = w;
    w_all.insert(w_all.end(), pa.unused.begin(), pa.unused.end());
    std::sort(w_all.begin(), w_all.end());
    const std::size_t segment_cap = static_cast<std::size_t>(
        std::floor(static_cast<double>(z.size()) / std::max(1.0, cfg.closing.block_scale)));
    if (segment_cap < 2) throw StageFailed(stage, "reservoir too small to close the cycle");
    const Cover cover = cover_w(h, w_all, cfg, segment_cap - 1, ledger, Rng::derive(cfg.seed, 5));
    record(stage, true,
           std::to_string(cover.blocks) + " blocks of " + std::to_string(cover.block_size) +
               ", remainder " + std::to_string(cover.remainder));

    stage = "close";
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.emplace_back(pa.endpoints.second, cover.segments.empty() ? pa.endpoints.first
                                                                    : cover.segments[0].front());
    for (std::size_t i = 0; i < cover.segments.size(); ++i) {
      const Vertex next = i + 1 < cover.segments.size() ? cover.segments[i + 1].front()
                                                        : pa.endpoints.first;
      pairs.emplace_back(cover.segments[i].back(), next);
    }
    ConnectResult closing;
    try {
      closing = connect_pairs(h, pairs, z, cfg.closing, Rng::derive(cfg.seed, 6), &ledger);
    } catch (const std::exception& err) {
      throw StageFailed(stage, err.what());
    }
    const std::vector<Vertex>& absorbed = closing.system.used_inner;
    record(stage, true, std::to_string(absorbed.size()) + " reservoir vertices absorbed");

    stage = "validate";
    BergePath cycle = materialize(pa, absorbed);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      cycle.append(closing.system.paths[i]);
      if (i < cover.segments.size()) cycle.append(cover.segments[i]);
    }
    if (cycle.vertices.size() < 2 || cycle.back() != cycle.front()) {
      throw StageFailed(stage, "segments do not close up");
    }
    cycle.vertices.pop_back();
    cycle.closed = true;
    const WalkReport rep = validate_walk(h, cycle, WalkMode::berge);
    if (!rep.valid || !rep.spanning) {
      throw StageFailed(stage, rep.valid ? "cycle is not spanning" : rep.first_violation);
    }
    cycle.is_berge = true;
    record(stage, true, "spanning Berge cycle");
    res.certificate = std::move(cycle);
    return finish(SolveStatus::found);
  } catch (const StageFailed& err) {
    res.stats.failure = StageFailure{err.stage(), err.cause()};
    record(err.stage(), false, err.cause());
  } catch (const std::exception& err) {
    res.stats.failure = StageFailure{stage, err.what()};
    record(stage, false, err.what());
  }
  return finish(SolveStatus::search_exhausted);
}

}  // namespace

SolveResult berge_hamilton_resilient(const Hypergraph& h, const PipelineConfig& cfg) {
  const int attempts = std::max(1, cfg.attempts);
  SolveResult out;
  bool configured = false;
  double elapsed = 0.0;
  for (int k = 0; k < attempts; ++k) {
    PipelineConfig c = cfg;
    if (k > 0) {
      const double scale = std::pow(cfg.relax, k);
      c.seed = Rng::derive(cfg.seed, 0x72656c, static_cast<std::uint64_t>(k));
      c.z_min_edges *= scale;
      for (ConnectConfig* cc : {&c.absorber.cycles, &c.absorber.chords, &c.connector, &c.closing}) {
        cc->min_block_edges *= scale;
      }
    }
    SolveResult r = attempt_once(h, c);
    elapsed += r.stats.elapsed_ms;
    if (k > 0) {
      for (StageOutcome& st : r.stats.stages) st.detail = "attempt " + std::to_string(k + 1) + ": " + st.detail;
    }
    out.stats.stages.insert(out.stats.stages.end(), r.stats.stages.begin(), r.stats.stages.end());
    configured = configured || r.status != SolveStatus::precondition_failed;
    out.status = r.status;
    out.certificate = std::move(r.certificate);
    out.stats.failure = r.stats.failure;
    if (k == 0 || r.stats.precondition_met) {
      out.stats.precondition_met = r.stats.precondition_met;
      out.stats.precondition = r.stats.precondition;
    }
    if (r.status == SolveStatus::found) break;
  }
  if (out.status != SolveStatus::found && configured) out.status = SolveStatus::search_exhausted;
  out.mode = WalkMode::berge;
  out.stats.elapsed_ms = elapsed;
  return out;
}

}  // namespace berge
