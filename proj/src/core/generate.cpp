#include "berge/generate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>

#include "berge/rng.hpp"

namespace berge {

Hypergraph gen_random_hypergraph(std::size_t n, unsigned r, double p, std::uint64_t seed,
                                 const GenOptions& opts) {
  if (r < 2 || r > n) throw ParameterError("need 2 <= r <= n");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  Rng rng(seed);
  const std::uint64_t total = binom_exact(n, r);
  std::vector<Vertex> flat;

  if (total <= opts.enumeration_cap) {
    std::vector<Vertex> cur(r);
    for (unsigned i = 0; i < r; ++i) cur[i] = i;
    while (true) {
      if (rng.bernoulli(p)) flat.insert(flat.end(), cur.begin(), cur.end());
      int i = static_cast<int>(r) - 1;
      while (i >= 0 && cur[i] == n - r + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (unsigned j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return Hypergraph::from_flat(n, r, std::move(flat));
  }

  const std::uint64_t count = rng.binomial(total, p);
  const double bits = r * std::log2(static_cast<double>(n));
  std::vector<Vertex> e(r);
  auto draw = [&] {
    for (unsigned i = 0; i < r; ++i) {
      bool fresh;
      do {
        e[i] = static_cast<Vertex>(rng.below(n));
        fresh = std::find(e.begin(), e.begin() + i, e[i]) == e.begin() + i;
      } while (!fresh);
    }
    std::sort(e.begin(), e.end());
  };
  flat.reserve(count * r);
  if (bits <= 64.0) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count);
    while (seen.size() < count) {
      draw();
      std::uint64_t key = 0;
      for (Vertex v : e) key = key * n + v;
      if (seen.insert(key).second) flat.insert(flat.end(), e.begin(), e.end());
    }
  } else {
    std::set<std::vector<Vertex>> seen;
    while (seen.size() < count) {
      draw();
      if (seen.insert(e).second) flat.insert(flat.end(), e.begin(), e.end());
    }
  }
  return Hypergraph::from_flat(n, r, std::move(flat));
}

}  // namespace berge
