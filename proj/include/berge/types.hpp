#ifndef BERGE_TYPES_HPP
#define BERGE_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace berge {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Raised on invalid arguments (out-of-range vertices, bad probabilities, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C(n, k) as a double; 0 when k > n.
double binom(double n, unsigned k);

/// C(n, k) exactly, saturating at UINT64_MAX.
std::uint64_t binom_exact(std::uint64_t n, std::uint64_t k);

/// (k)! as a double.
double factorial(unsigned k);

}  // namespace berge

#endif
