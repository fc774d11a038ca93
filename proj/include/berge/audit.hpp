#ifndef BERGE_AUDIT_HPP
#define BERGE_AUDIT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

enum class AuditMode { automatic, exhaustive, sampled };

struct AuditOptions {
  AuditMode mode = AuditMode::automatic;
  /// Exhaustive enumeration is chosen automatically only up to this n.
  std::size_t exhaustive_max_n = 16;
  /// Size cap on |T| and |U| during exhaustive enumeration.
  std::size_t max_set_size = 5;
};

struct PairWitness {
  std::vector<Vertex> t;
  std::vector<Vertex> u;
  std::size_t observed = 0;
  double bound = 0.0;
};

struct PropertyCheck {
  bool pass = true;
  AuditMode mode = AuditMode::exhaustive;
  std::optional<PairWitness> witness;
  std::uint64_t pairs_checked = 0;
  // Property (ii) only: size threshold m and the eligible |U| range.
  double m = 0.0;
  std::size_t u_min = 0;
  std::size_t u_max = 0;
  bool vacuous = false;
};

struct CodegreeCheck {
  bool pass = true;
  std::size_t max_codegree = 0;
  double bound = 0.0;
  std::vector<Vertex> witness;  // a pair attaining max_codegree
};

struct PseudorandomReport {
  double epsilon = 0.0;
  double p = 0.0;
  AuditMode mode = AuditMode::exhaustive;
  PropertyCheck property_i;
  PropertyCheck property_ii;
  CodegreeCheck codegree;
  std::uint64_t pairs_checked = 0;
  bool pass() const { return property_i.pass && property_ii.pass && codegree.pass; }
};

double property_i_bound(std::size_t n, unsigned r, double eps, double p, std::size_t t_size,
                        std::size_t u_size);
double property_ii_bound(unsigned r, double eps, double p, std::size_t t_size,
                         std::size_t u_size);
/// (13 (r-1)! ln n / (eps^3 p))^(1/(r-1)).
double property_ii_threshold(std::size_t n, unsigned r, double eps, double p);

/// Pass iff Delta_2 <= bound (default 2 ln n).
CodegreeCheck check_codegree(const Hypergraph& h, std::optional<double> bound = std::nullopt);

PropertyCheck check_property_i(const Hypergraph& h, double eps, double p, std::uint64_t budget,
                               std::uint64_t seed, const AuditOptions& opts = {});
PropertyCheck check_property_ii(const Hypergraph& h, double eps, double p, std::uint64_t budget,
                                std::uint64_t seed, const AuditOptions& opts = {});

PseudorandomReport audit_pseudorandom(const Hypergraph& h, double eps, double p,
                                      std::uint64_t budget, std::uint64_t seed,
                                      const AuditOptions& opts = {});

/// True iff the witness pair is disjoint, its count is reproduced by
/// edges_between, and that count exceeds the recorded bound.
bool witness_reproduces(const Hypergraph& h, const PairWitness& w);

}  // namespace berge

#endif
