#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "berge/connect.hpp"
#include "berge/degree.hpp"
#include "berge/rng.hpp"

namespace berge {

SamplingFailed::SamplingFailed(Vertex worst, double shortfall)
    : std::runtime_error("no degree-inheriting subset found; worst vertex " +
                         std::to_string(worst) + " reached " +
                         std::to_string(shortfall) + " of its target"),
      worst_(worst),
      shortfall_(shortfall) {}

double measured_density(const Hypergraph& h, std::span<const Vertex> pool,
                        std::span<const Vertex> demand) {
  if (demand.empty()) return 1.0;
  VertexMask mask(h.n(), pool);
  double best = std::numeric_limits<double>::infinity();
  for (Vertex v : demand) {
    const std::size_t avail = pool.size() - (mask[v] ? 1 : 0);
    const double slots = binom(static_cast<double>(avail), h.r() - 1);
    if (slots <= 0.0) continue;
    best = std::min(best, static_cast<double>(degree_into(h, v, mask)) / slots);
  }
  return std::isfinite(best) ? best : 0.0;
}

std::vector<Vertex> sample_inheriting_subset(const Hypergraph& h, std::span<const Vertex> pool,
                                             std::size_t m, std::span<const Vertex> demand,
                                             double density, double slack, int attempts,
                                             std::uint64_t seed, const SamplingOptions& opts) {
  const std::size_t need = opts.check_complement ? 2 * m : m;
  if (pool.size() < need) {
    throw ParameterError("pool of " + std::to_string(pool.size()) + " vertices cannot host a " +
                         std::to_string(m) + "-subset");
  }
  const double factor = (1.0 - slack) * density;
  Rng rng(seed);
  Vertex worst = demand.empty() ? kNoVertex : demand.front();
  double worst_ratio = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < std::max(1, attempts); ++attempt) {
    std::vector<Vertex> u = rng.sample(pool, m);
    std::sort(u.begin(), u.end());
    const VertexMask in_u(h.n(), u);
    VertexMask rest(h.n(), pool);
    for (Vertex v : u) rest.set(v, false);

    bool ok = true;
    double attempt_ratio = std::numeric_limits<double>::infinity();
    Vertex attempt_worst = worst;
    auto check = [&](Vertex v, const VertexMask& target, std::size_t size) {
      const std::size_t avail = size - (target[v] ? 1 : 0);
      const double want = factor * binom(static_cast<double>(avail), h.r() - 1);
      if (want <= 0.0) return;
      const double ratio = static_cast<double>(degree_into(h, v, target)) / want;
      if (ratio < attempt_ratio) {
        attempt_ratio = ratio;
        attempt_worst = v;
      }
      if (ratio < 1.0) ok = false;
    };
    for (Vertex v : demand) {
      check(v, in_u, m);
      if (opts.check_complement) check(v, rest, pool.size() - m);
    }
    if (ok) return u;
    // Report the bottleneck of the closest failed attempt.
    if (worst_ratio == std::numeric_limits<double>::infinity() || attempt_ratio > worst_ratio) {
      worst_ratio = attempt_ratio;
      worst = attempt_worst;
    }
  }
  throw SamplingFailed(worst, worst_ratio);
}

}  // namespace berge
