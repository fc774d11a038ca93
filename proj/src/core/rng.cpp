#include "berge/rng.hpp"

#include <cmath>
#include <limits>

namespace berge {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire-style rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t Rng::geometric(double p) {
  if (p >= 1.0) return 0;
  double u = uniform();
  if (u <= 0.0) u = 0x1.0p-53;
  const double g = std::floor(std::log(u) / std::log1p(-p));
  if (g >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(g);
}

std::uint64_t Rng::binomial(std::uint64_t n, double p) {
  if (p <= 0.0 || n == 0) return 0;
  if (p >= 1.0) return n;
  std::uint64_t count = 0;
  std::uint64_t pos = 0;
  while (true) {
    const std::uint64_t skip = geometric(p);
    if (skip >= n - pos) break;
    pos += skip + 1;
    ++count;
    if (pos >= n) break;
  }
  return count;
}

namespace {
std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(splitmix(master) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

}  // namespace berge
