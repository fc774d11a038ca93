#ifndef BERGE_RNG_HPP
#define BERGE_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace berge {

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Distributions are implemented here because the standard library leaves
/// theirs implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return p >= 1.0 || (p > 0.0 && uniform() < p); }

  /// Number of failures before the first success, success probability p in (0,1].
  std::uint64_t geometric(double p);

  /// Binomial(n, p) draw (exact via geometric skipping).
  std::uint64_t binomial(std::uint64_t n, double p);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  /// k distinct elements of `from`, in random order.
  template <typename T>
  std::vector<T> sample(std::span<const T> from, std::size_t k) {
    std::vector<T> pool(from.begin(), from.end());
    if (k > pool.size()) k = pool.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + below(pool.size() - i)]);
    }
    pool.resize(k);
    return pool;
  }

  /// Stateless seed derivation: mixes a master seed with two indices.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

 private:
  std::mt19937_64 engine_;
};

}  // namespace berge

#endif
