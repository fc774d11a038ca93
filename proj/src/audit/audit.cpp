#include "berge/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "berge/degree.hpp"
#include "berge/rng.hpp"

namespace berge {

double property_i_bound(std::size_t n, unsigned r, double eps, double p, std::size_t t_size,
                        std::size_t u_size) {
  const double ln_n = std::log(static_cast<double>(n));
  const double log_term = ln_n > 0.0 ? std::pow(ln_n, 1.0 + eps) : 0.0;
  return (1.0 + eps) * p * static_cast<double>(t_size) * binom(static_cast<double>(u_size), r - 1) +
         static_cast<double>(t_size) * log_term;
}

double property_ii_bound(unsigned r, double eps, double p, std::size_t t_size,
                         std::size_t u_size) {
  return (1.0 + eps) * p * static_cast<double>(t_size) * binom(static_cast<double>(u_size), r - 1);
}

double property_ii_threshold(std::size_t n, unsigned r, double eps, double p) {
  if (p <= 0.0) return std::numeric_limits<double>::infinity();
  const double num = 13.0 * factorial(r - 1) * std::log(static_cast<double>(n));
  return std::pow(num / (eps * eps * eps * p), 1.0 / static_cast<double>(r - 1));
}

CodegreeCheck check_codegree(const Hypergraph& h, std::optional<double> bound) {
  CodegreeCheck out;
  out.bound = bound ? *bound : 2.0 * std::log(static_cast<double>(std::max<std::size_t>(h.n(), 1)));
  const CollectiveMax mx = max_collective_degree(h, 2);
  out.max_codegree = mx.value;
  out.witness = mx.witness;
  out.pass = static_cast<double>(out.max_codegree) <= out.bound;
  return out;
}

namespace {

// For a set U, computes deg(t, U) for every t outside U with a nonzero value.
class RestrictedDegrees {
 public:
  explicit RestrictedDegrees(const Hypergraph& h) : h_(h) {
    const unsigned k = h.r() - 1;
    packable_ = k * std::log2(std::max<double>(2.0, static_cast<double>(h.n()))) <= 62.0;
    if (!packable_) return;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const auto ed = h.edge(e);
      for (unsigned skip = 0; skip < h.r(); ++skip) {
        std::uint64_t key = 0;
        for (unsigned j = 0; j < h.r(); ++j) {
          if (j != skip) key = key * h.n() + ed[j];
        }
        completions_[key].push_back(ed[skip]);
      }
    }
  }

  // Sparse (vertex, degree) list, sorted by degree descending then vertex ascending.
  std::vector<std::pair<Vertex, std::size_t>> compute(const std::vector<Vertex>& u,
                                                      const VertexMask& umask) {
    counts_.assign(h_.n(), 0);
    touched_.clear();
    const unsigned k = h_.r() - 1;
    auto bump = [&](Vertex t) {
      if (umask[t]) return;
      if (counts_[t]++ == 0) touched_.push_back(t);
    };
    if (packable_ && binom(static_cast<double>(u.size()), k) < static_cast<double>(h_.num_edges())) {
      std::vector<unsigned> idx(k);
      if (u.size() >= k) {
        std::iota(idx.begin(), idx.end(), 0u);
        while (true) {
          std::uint64_t key = 0;
          for (unsigned j = 0; j < k; ++j) key = key * h_.n() + u[idx[j]];
          auto it = completions_.find(key);
          if (it != completions_.end()) {
            for (Vertex t : it->second) bump(t);
          }
          int i = static_cast<int>(k) - 1;
          while (i >= 0 && idx[i] == u.size() - k + i) --i;
          if (i < 0) break;
          ++idx[i];
          for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
      }
    } else {
      for (EdgeId e = 0; e < h_.num_edges(); ++e) {
        unsigned inside = 0;
        Vertex outside = kNoVertex;
        for (Vertex v : h_.edge(e)) {
          if (umask[v]) {
            ++inside;
          } else {
            outside = v;
          }
        }
        if (inside == k) bump(outside);
      }
    }
    std::vector<std::pair<Vertex, std::size_t>> out;
    out.reserve(touched_.size());
    for (Vertex t : touched_) out.emplace_back(t, counts_[t]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return out;
  }

 private:
  const Hypergraph& h_;
  bool packable_ = false;
  std::unordered_map<std::uint64_t, std::vector<Vertex>> completions_;
  std::vector<std::size_t> counts_;
  std::vector<Vertex> touched_;
};

struct SizeRule {
  // Eligible |T| range for a given |U|.
  std::function<std::pair<std::size_t, std::size_t>(std::size_t)> t_range;
  std::function<double(std::size_t, std::size_t)> bound;  // (|T|, |U|)
};

// Worst-case T of each admissible size against a fixed U; first violation wins.
std::optional<PairWitness> worst_t(const Hypergraph& h, RestrictedDegrees& rd,
                                   const std::vector<Vertex>& u, std::size_t t_lo,
                                   std::size_t t_hi, const SizeRule& rule) {
  if (t_lo > t_hi) return std::nullopt;
  const VertexMask umask(h.n(), u);
  const auto degs = rd.compute(u, umask);
  std::size_t observed = 0;
  for (std::size_t tau = 1; tau <= t_hi; ++tau) {
    if (tau <= degs.size()) observed += degs[tau - 1].second;
    if (tau < t_lo) continue;
    const double bound = rule.bound(tau, u.size());
    if (static_cast<double>(observed) > bound) {
      PairWitness w;
      w.u = u;
      w.observed = observed;
      w.bound = bound;
      for (std::size_t i = 0; i < std::min(tau, degs.size()); ++i) w.t.push_back(degs[i].first);
      // Pad with zero-degree vertices outside U.
      VertexMask taken(h.n(), w.t);
      for (Vertex v = 0; v < h.n() && w.t.size() < tau; ++v) {
        if (!umask[v] && !taken[v]) w.t.push_back(v);
      }
      std::sort(w.t.begin(), w.t.end());
      return w;
    }
  }
  return std::nullopt;
}

double count_pairs(std::size_t n, std::size_t u_lo, std::size_t u_hi, const SizeRule& rule) {
  double total = 0.0;
  for (std::size_t u = u_lo; u <= u_hi; ++u) {
    const auto [t_lo, t_hi] = rule.t_range(u);
    double inner = 0.0;
    for (std::size_t t = t_lo; t <= t_hi; ++t) inner += binom(static_cast<double>(n - u), t);
    total += binom(static_cast<double>(n), u) * inner;
  }
  return total;
}

void run_exhaustive(const Hypergraph& h, std::size_t u_lo, std::size_t u_hi, const SizeRule& rule,
                    PropertyCheck& out) {
  out.mode = AuditMode::exhaustive;
  out.pairs_checked = static_cast<std::uint64_t>(
      std::min(count_pairs(h.n(), u_lo, u_hi, rule), 1.8e19));
  RestrictedDegrees rd(h);
  for (std::size_t size = u_lo; size <= u_hi && size <= h.n(); ++size) {
    const auto [t_lo, t_hi] = rule.t_range(size);
    if (t_lo > t_hi) continue;
    std::vector<Vertex> u(size);
    std::iota(u.begin(), u.end(), 0u);
    while (true) {
      if (auto w = worst_t(h, rd, u, t_lo, t_hi, rule)) {
        out.pass = false;
        out.witness = std::move(w);
        return;
      }
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && u[i] == h.n() - size + i) --i;
      if (i < 0) break;
      ++u[i];
      for (std::size_t j = i + 1; j < size; ++j) u[j] = u[j - 1] + 1;
    }
  }
}

void run_sampled(const Hypergraph& h, std::size_t u_lo, std::size_t u_hi, const SizeRule& rule,
                 std::uint64_t budget, std::uint64_t seed, PropertyCheck& out) {
  out.mode = AuditMode::sampled;
  std::vector<std::pair<std::size_t, std::size_t>> combos;
  for (std::size_t u = u_lo; u <= u_hi; ++u) {
    const auto [t_lo, t_hi] = rule.t_range(u);
    for (std::size_t t = t_lo; t <= t_hi; ++t) combos.emplace_back(u, t);
  }
  if (combos.empty()) return;
  Rng rng(seed);
  RestrictedDegrees rd(h);
  std::vector<Vertex> all(h.n());
  std::iota(all.begin(), all.end(), 0u);
  for (std::uint64_t draw = 0; draw < budget; ++draw) {
    const auto [u_size, t_size] = combos[rng.below(combos.size())];
    std::vector<Vertex> u = rng.sample(std::span<const Vertex>(all), u_size);
    std::sort(u.begin(), u.end());
    ++out.pairs_checked;
    if (auto w = worst_t(h, rd, u, t_size, t_size, rule)) {
      out.pass = false;
      out.witness = std::move(w);
      return;
    }
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.5)) throw ParameterError("epsilon must lie in (0, 3/2)");
}

}  // namespace

PropertyCheck check_property_i(const Hypergraph& h, double eps, double p, std::uint64_t budget,
                               std::uint64_t seed, const AuditOptions& opts) {
  check_eps(eps);
  PropertyCheck out;
  const std::size_t n = h.n();
  const unsigned r = h.r();
  const bool exhaustive = opts.mode == AuditMode::exhaustive ||
                          (opts.mode == AuditMode::automatic && n <= opts.exhaustive_max_n);
  const std::size_t cap = exhaustive ? opts.max_set_size : n;
  SizeRule rule;
  rule.t_range = [n, cap](std::size_t u) {
    return std::make_pair(u, std::min(cap, n - u));
  };
  rule.bound = [n, r, eps, p](std::size_t t, std::size_t u) {
    return property_i_bound(n, r, eps, p, t, u);
  };
  const std::size_t u_hi = std::min(cap, n / 2);
  out.u_min = 1;
  out.u_max = u_hi;
  if (exhaustive) {
    run_exhaustive(h, 1, u_hi, rule, out);
  } else {
    run_sampled(h, 1, u_hi, rule, budget, seed, out);
  }
  return out;
}

PropertyCheck check_property_ii(const Hypergraph& h, double eps, double p, std::uint64_t budget,
                                std::uint64_t seed, const AuditOptions& opts) {
  check_eps(eps);
  PropertyCheck out;
  const std::size_t n = h.n();
  const unsigned r = h.r();
  out.m = property_ii_threshold(n, r, eps, p);
  const double lo = std::max(1.0, std::ceil(out.m - 1e-9));
  out.u_max = n / 2;
  if (!std::isfinite(lo) || lo > static_cast<double>(out.u_max)) {
    out.u_min = std::isfinite(lo) ? static_cast<std::size_t>(lo) : 0;
    out.vacuous = true;
    out.mode = AuditMode::exhaustive;
    return out;
  }
  out.u_min = static_cast<std::size_t>(lo);
  const bool exhaustive =
      opts.mode == AuditMode::exhaustive ||
      (opts.mode == AuditMode::automatic && n <= opts.exhaustive_max_n &&
       out.u_max <= opts.max_set_size);
  const std::size_t cap = exhaustive ? opts.max_set_size : n;
  SizeRule rule;
  rule.t_range = [eps, cap](std::size_t u) {
    const auto t_lo = static_cast<std::size_t>(
        std::max(1.0, std::ceil(eps * static_cast<double>(u) - 1e-9)));
    return std::make_pair(t_lo, std::min(u, cap));
  };
  rule.bound = [r, eps, p](std::size_t t, std::size_t u) {
    return property_ii_bound(r, eps, p, t, u);
  };
  const std::size_t u_hi = std::min(cap, out.u_max);
  if (exhaustive) {
    run_exhaustive(h, out.u_min, u_hi, rule, out);
  } else {
    run_sampled(h, out.u_min, u_hi, rule, budget, seed, out);
  }
  return out;
}

PseudorandomReport audit_pseudorandom(const Hypergraph& h, double eps, double p,
                                      std::uint64_t budget, std::uint64_t seed,
                                      const AuditOptions& opts) {
  PseudorandomReport rep;
  rep.epsilon = eps;
  rep.p = p;
  rep.property_i = check_property_i(h, eps, p, budget, Rng::derive(seed, 1), opts);
  rep.property_ii = check_property_ii(h, eps, p, budget, Rng::derive(seed, 2), opts);
  rep.codegree = check_codegree(h);
  rep.mode = rep.property_i.mode == AuditMode::sampled || rep.property_ii.mode == AuditMode::sampled
                 ? AuditMode::sampled
                 : AuditMode::exhaustive;
  rep.pairs_checked = rep.property_i.pairs_checked + rep.property_ii.pairs_checked;
  return rep;
}

bool witness_reproduces(const Hypergraph& h, const PairWitness& w) {
  const VertexMask umask(h.n(), w.u);
  for (Vertex t : w.t) {
    if (umask[t]) return false;
  }
  const std::size_t observed = edges_between(h, w.t, w.u);
  return observed == w.observed && static_cast<double>(observed) > w.bound;
}

}  // namespace berge
