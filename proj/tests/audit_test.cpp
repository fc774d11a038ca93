#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "berge/audit.hpp"
#include "berge/degree.hpp"
#include "berge/generate.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

// Every disjoint (T, U) pair over n <= 9 vertices via ternary labelling.
template <class F>
void for_each_pair(std::size_t n, F&& f) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Vertex> t, u;
    std::size_t c = code;
    for (Vertex v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) t.push_back(v);
      if (c % 3 == 2) u.push_back(v);
    }
    f(t, u);
  }
}

bool property_i_oracle(const Hypergraph& h, double eps, double p) {
  const std::size_t n = h.n();
  const double logterm = std::pow(std::log(static_cast<double>(n)), 1.0 + eps);
  bool ok = true;
  for_each_pair(n, [&](const std::vector<Vertex>& t, const std::vector<Vertex>& u) {
    if (!ok || u.empty() || u.size() > t.size()) return;
    const double bound = (1.0 + eps) * p * static_cast<double>(t.size()) *
                             binom(static_cast<double>(u.size()), h.r() - 1) +
                         static_cast<double>(t.size()) * logterm;
    if (static_cast<double>(oracle::between(h, t, u)) > bound) ok = false;
  });
  return ok;
}

bool property_ii_oracle(const Hypergraph& h, double eps, double p, double m) {
  const std::size_t n = h.n();
  bool ok = true;
  for_each_pair(n, [&](const std::vector<Vertex>& t, const std::vector<Vertex>& u) {
    const double ts = static_cast<double>(t.size()), us = static_cast<double>(u.size());
    if (!ok || t.empty() || eps * us > ts || t.size() > u.size() || 2 * u.size() > n || us < m) {
      return;
    }
    const double bound = (1.0 + eps) * p * ts * binom(us, h.r() - 1);
    if (static_cast<double>(oracle::between(h, t, u)) > bound) ok = false;
  });
  return ok;
}

}  // namespace

TEST_CASE("codegree examples") {
  const CodegreeCheck empty = check_codegree(Hypergraph(10, 3, {}));
  CHECK(empty.pass);
  CHECK(empty.max_codegree == 0);
  const CodegreeCheck k20 = check_codegree(complete_hypergraph(20, 3));
  CHECK_FALSE(k20.pass);
  CHECK(k20.max_codegree == 18);
  CHECK(k20.bound == doctest::Approx(2.0 * std::log(20.0)));
  REQUIRE(k20.witness.size() == 2);
  CHECK(collective_degree(complete_hypergraph(20, 3), k20.witness) == 18);
}

TEST_CASE("codegree witness matches a pairwise scan") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Hypergraph h = gen_random_hypergraph(12, 3, 0.3, seed);
    const CodegreeCheck c = check_codegree(h, 3.0);
    CHECK(c.max_codegree == oracle::max_codegree(h));
    CHECK(c.pass == (c.max_codegree <= 3));
  }
}

TEST_CASE("threshold arithmetic") {
  CHECK(property_ii_threshold(100, 3, 0.5, 0.9) ==
        doctest::Approx(std::sqrt(13.0 * 2.0 * std::log(100.0) / (0.125 * 0.9))));
  CHECK(property_ii_threshold(100, 3, 0.5, 0.9) == doctest::Approx(32.6).epsilon(0.01));
  CHECK(property_i_bound(10, 3, 0.5, 0.1, 2, 3) ==
        doctest::Approx(1.5 * 0.1 * 2 * 3 + 2 * std::pow(std::log(10.0), 1.5)));
  CHECK(property_ii_bound(3, 0.5, 0.1, 2, 4) == doctest::Approx(1.5 * 0.1 * 2 * 6));
}

TEST_CASE("property (i) examples") {
  CHECK(check_property_i(Hypergraph(8, 3, {}), 0.1, 0.5, 100, 1).pass);
  const Hypergraph k8 = complete_hypergraph(8, 3);
  const PropertyCheck bad = check_property_i(k8, 0.1, 0.01, 100, 1);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.witness.has_value());
  CHECK(witness_reproduces(k8, *bad.witness));
  CHECK(oracle::between(k8, bad.witness->t, bad.witness->u) == bad.witness->observed);
  CHECK_THROWS_AS(check_property_i(k8, 0.0, 0.1, 10, 1), ParameterError);
  CHECK_THROWS_AS(check_property_i(k8, 1.5, 0.1, 10, 1), ParameterError);
}

TEST_CASE("property (i) on sparse random hypergraphs passes exhaustively") {
  AuditOptions opts;
  opts.mode = AuditMode::exhaustive;
  opts.max_set_size = 4;
  int passes = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Hypergraph h = gen_random_hypergraph(50, 3, 0.02, seed);
    passes += check_property_i(h, 0.5, 0.02, 0, seed, opts).pass;
  }
  CHECK(passes >= 45);
}

TEST_CASE("property (ii) examples") {
  const PropertyCheck big_p = check_property_ii(Hypergraph(100, 3, {}), 0.5, 0.9, 200, 1);
  CHECK(big_p.pass);
  CHECK(big_p.u_min == 33);
  CHECK(big_p.u_max == 50);
  CHECK(big_p.m == doctest::Approx(32.6).epsilon(0.01));
  const PropertyCheck vacuous = check_property_ii(complete_hypergraph(10, 3), 0.5, 0.01, 50, 1);
  CHECK(vacuous.pass);
  CHECK(vacuous.vacuous);
  CHECK(vacuous.pairs_checked == 0);
  // Edgeless with m < 1.
  const PropertyCheck tiny_m = check_property_ii(Hypergraph(10, 3, {}), 1.4, 1.0, 50, 1);
  CHECK(tiny_m.pass);
}

TEST_CASE("exhaustive mode agrees with a brute-force enumeration of all pairs") {
  AuditOptions opts;
  opts.mode = AuditMode::exhaustive;
  opts.max_set_size = 9;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Hypergraph h = gen_random_hypergraph(8, 3, 0.5, seed);
    for (double p : {0.05, 0.2, 0.5}) {
      const PropertyCheck i = check_property_i(h, 0.3, p, 0, seed, opts);
      CHECK(i.pass == property_i_oracle(h, 0.3, p));
      if (!i.pass) CHECK(witness_reproduces(h, *i.witness));
      const PropertyCheck ii = check_property_ii(h, 1.4, p * 20, 0, seed, opts);
      CHECK(ii.pass == property_ii_oracle(h, 1.4, p * 20, ii.m));
      if (!ii.pass) CHECK(witness_reproduces(h, *ii.witness));
    }
  }
}

TEST_CASE("exhaustive pair count equals the number of eligible pairs") {
  AuditOptions opts;
  opts.mode = AuditMode::exhaustive;
  opts.max_set_size = 9;
  const Hypergraph h(7, 3, {});
  std::uint64_t expected = 0;
  for_each_pair(7, [&](const std::vector<Vertex>& t, const std::vector<Vertex>& u) {
    expected += !u.empty() && u.size() <= t.size() && 2 * u.size() <= 7;
  });
  CHECK(check_property_i(h, 0.3, 0.1, 0, 1, opts).pairs_checked == expected);
}

TEST_CASE("sampled and exhaustive modes agree where both run") {
  AuditOptions ex;
  ex.mode = AuditMode::exhaustive;
  ex.max_set_size = 9;
  AuditOptions sa;
  sa.mode = AuditMode::sampled;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph h = gen_random_hypergraph(8, 3, 0.6, seed);
    const double p = 0.1 + 0.02 * static_cast<double>(seed);
    const PropertyCheck a = check_property_i(h, 0.2, p, 0, seed, ex);
    const PropertyCheck b = check_property_i(h, 0.2, p, 40000, seed, sa);
    CHECK(a.pass == b.pass);
    if (!b.pass) CHECK(witness_reproduces(h, *b.witness));
  }
}

TEST_CASE("monotonicity in epsilon on the checked pairs") {
  AuditOptions ex;
  ex.mode = AuditMode::exhaustive;
  ex.max_set_size = 9;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Hypergraph h = gen_random_hypergraph(8, 3, 0.5, seed);
    bool passed = false;
    for (double eps : {0.05, 0.2, 0.5, 0.9, 1.3}) {
      const bool now = check_property_i(h, eps, 0.1, 0, seed, ex).pass;
      if (passed) CHECK(now);
      passed = passed || now;
    }
  }
}

TEST_CASE("report aggregates the three checks") {
  const PseudorandomReport rep = audit_pseudorandom(Hypergraph(12, 3, {}), 0.5, 0.1, 100, 1);
  CHECK(rep.pass());
  const PseudorandomReport bad = audit_pseudorandom(complete_hypergraph(12, 3), 0.5, 0.01, 100, 1);
  CHECK_FALSE(bad.pass());
}
