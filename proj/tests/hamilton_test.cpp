#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "berge/degree.hpp"
#include "berge/generate.hpp"
#include "berge/hamilton.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

std::size_t weak_bound(std::size_t n) { return binom_exact((n + 1) / 2 - 1, 2); }

bool found_valid(const Hypergraph& h, const SolveResult& r, bool berge_mode) {
  return r.status == SolveStatus::found && r.certificate &&
         oracle::certificate_ok(h, *r.certificate, berge_mode) &&
         is_hamilton(h, *r.certificate, berge_mode ? WalkMode::berge : WalkMode::weak);
}

}  // namespace

TEST_CASE("status names and exit codes") {
  CHECK(exit_code(SolveStatus::found) == 0);
  CHECK(exit_code(SolveStatus::not_found) == 3);
  CHECK(exit_code(SolveStatus::precondition_failed) == 4);
  CHECK(exit_code(SolveStatus::search_exhausted) == 5);
  CHECK(to_string(SolveStatus::not_found) == "not_found");
}

TEST_CASE("weak dense examples") {
  const Hypergraph k7 = complete_hypergraph(7, 3);
  const SolveResult r = weak_hamilton_dense(k7);
  CHECK(found_valid(k7, r, false));
  CHECK(r.certificate->vertices.size() == 7);
  CHECK(r.stats.precondition_met);

  const Hypergraph k4 = complete_hypergraph(4, 3);
  CHECK(found_valid(k4, weak_hamilton_dense(k4), false));

  const Hypergraph two = instances::two_disjoint_k5();
  CHECK(degree_profile(two).min == 6);
  CHECK(weak_bound(10) == 6);
  const SolveResult split = weak_hamilton_dense(two);
  CHECK(split.status != SolveStatus::found);
  CHECK_FALSE(split.stats.precondition_met);
  CHECK(brute_force(two, WalkMode::weak).status == SolveStatus::not_found);
}

TEST_CASE("berge dense examples") {
  const Hypergraph k9 = complete_hypergraph(9, 3);
  CHECK(weak_bound(9) + 8 == 14);
  CHECK(degree_profile(k9).min == 28);
  const SolveResult r = berge_hamilton_dense(k9);
  CHECK(found_valid(k9, r, true));
  CHECK(r.stats.precondition_met);

  const Hypergraph shared = instances::two_k5_sharing_a_vertex();
  CHECK(degree_profile(shared).min == 6);
  const SolveResult s = berge_hamilton_dense(shared);
  CHECK((s.status == SolveStatus::precondition_failed || s.status == SolveStatus::search_exhausted ||
         s.status == SolveStatus::not_found));
  CHECK(brute_force(shared, WalkMode::berge).status == SolveStatus::not_found);
  CHECK(brute_force(shared, WalkMode::weak).status == SolveStatus::not_found);

  const Hypergraph few(6, 3, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}, {0, 1, 5}, {1, 2, 3}});
  CHECK(berge_hamilton_dense(few).status == SolveStatus::not_found);
  CHECK(brute_force(few, WalkMode::berge).status == SolveStatus::not_found);
}

TEST_CASE("berge dense solver is complete above the degree bound") {
  for (std::size_t n = 7; n <= 10; ++n) {
    const std::size_t bound = weak_bound(n) + n - 1;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const Hypergraph h = instances::min_degree_instance(n, bound, seed * 101 + n);
      REQUIRE(degree_profile(h).min >= bound);
      const SolveResult r = berge_hamilton_dense(h);
      CHECK(r.stats.precondition_met);
      CHECK(found_valid(h, r, true));
    }
  }
}

TEST_CASE("weak dense solver is complete above the degree bound") {
  for (std::size_t n = 7; n <= 10; ++n) {
    const std::size_t bound = weak_bound(n) + 1;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const Hypergraph h = instances::min_degree_instance(n, bound, seed * 103 + n);
      REQUIRE(degree_profile(h).min > weak_bound(n));
      const SolveResult r = weak_hamilton_dense(h);
      CHECK(r.stats.precondition_met);
      CHECK(found_valid(h, r, false));
    }
  }
}

TEST_CASE("brute force examples") {
  const Hypergraph k4 = complete_hypergraph(4, 3);
  CHECK(found_valid(k4, brute_force(k4, WalkMode::berge), true));
  const Hypergraph sparse(11, 3, {{0, 1, 2}});
  CHECK_THROWS_AS(brute_force(sparse, WalkMode::weak), ParameterError);
  BruteForceOptions opts;
  opts.override_cap = true;
  CHECK(brute_force(sparse, WalkMode::berge, opts).status == SolveStatus::not_found);
}

TEST_CASE("solvers agree with the permutation oracle") {
  Rng rng(5);
  int weak_yes = 0, berge_yes = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 5 + rng.below(3);
    const double p = 0.15 + 0.5 * rng.uniform();
    const Hypergraph h = gen_random_hypergraph(n, 3, p, 700 + static_cast<std::uint64_t>(trial));
    const bool weak = oracle::hamiltonian(h, false);
    const bool berge_ok = oracle::hamiltonian(h, true);
    weak_yes += weak;
    berge_yes += berge_ok;
    const SolveResult bw = brute_force(h, WalkMode::weak);
    const SolveResult bb = brute_force(h, WalkMode::berge);
    CHECK((bw.status == SolveStatus::found) == weak);
    CHECK((bb.status == SolveStatus::found) == berge_ok);
    if (weak) CHECK(found_valid(h, bw, false));
    if (berge_ok) CHECK(found_valid(h, bb, true));
    for (const SolveResult& r : {weak_hamilton_dense(h), weak_hamilton_search(h)}) {
      if (r.status == SolveStatus::found) CHECK(found_valid(h, r, false));
      if (r.status == SolveStatus::not_found) CHECK_FALSE(weak);
    }
    const SolveResult bd = berge_hamilton_dense(h);
    if (bd.status == SolveStatus::found) CHECK(found_valid(h, bd, true));
    if (bd.status == SolveStatus::not_found) CHECK_FALSE(berge_ok);
  }
  CHECK(weak_yes > 10);
  CHECK(berge_yes > 5);
}

TEST_CASE("weak search decides sparse random instances like brute force") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Hypergraph h = gen_random_hypergraph(10, 3, 0.05 + 0.002 * static_cast<double>(seed), seed);
    const SolveResult s = weak_hamilton_search(h);
    const SolveResult b = brute_force(h, WalkMode::weak);
    if (s.status == SolveStatus::found) {
      CHECK(found_valid(h, s, false));
      CHECK(b.status == SolveStatus::found);
    }
    if (s.status == SolveStatus::not_found) CHECK(b.status == SolveStatus::not_found);
  }
}

TEST_CASE("sparsify") {
  const Hypergraph k10 = complete_hypergraph(10, 3);
  CHECK(sparsify(k10, 1.0, 3) == k10);
  CHECK(sparsify(k10, 0.0, 3).num_edges() == 0);
  CHECK(sparsify(k10, 0.5, 9) == sparsify(k10, 0.5, 9));
  CHECK_THROWS_AS(sparsify(k10, 1.5, 1), ParameterError);
  double total = 0.0;
  const auto base = oracle::edge_list(k10);
  const std::set<std::vector<Vertex>> all(base.begin(), base.end());
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Hypergraph s = sparsify(k10, 0.5, seed);
    total += static_cast<double>(s.num_edges());
    for (const auto& e : oracle::edge_list(s)) CHECK(all.count(e) == 1);
  }
  // Binomial(120, 1/2): mean 60, variance 30; the 200-sample mean has sd sqrt(30/200).
  CHECK(std::abs(total / 200.0 - 60.0) <= 3.0 * std::sqrt(30.0 / 200.0));
}

TEST_CASE("pipeline sizes") {
  const PipelineConfig desk = PipelineConfig::desk();
  const auto s = desk.resolve(200, 3, 1.0);
  CHECK(s.z + s.y + s.w == 200);
  CHECK(s.z >= 1);
  CHECK(s.w >= 20);
  CHECK_THROWS_AS(desk.resolve(7), ParameterError);
  PipelineConfig tight;
  tight.z_size = 10;
  tight.y_size = 90;
  CHECK_THROWS_AS(tight.resolve(100), ParameterError);
  // The asymptotic shapes need astronomically large n.
  CHECK_THROWS_AS(PipelineConfig::asymptotic().resolve(400), ParameterError);
  const SolveResult r = berge_hamilton_resilient(complete_hypergraph(20, 3), tight);
  CHECK(r.status == SolveStatus::precondition_failed);
  REQUIRE(r.stats.failure.has_value());
  CHECK(r.stats.failure->stage == "config");
}

TEST_CASE("pipeline on complete hypergraphs") {
  for (std::size_t n : {70, 90, 120}) {
    const Hypergraph h = complete_hypergraph(n, 3);
    PipelineConfig cfg = PipelineConfig::desk();
    cfg.seed = n;
    const SolveResult r = berge_hamilton_resilient(h, cfg);
    CHECK(found_valid(h, r, true));
    CHECK_FALSE(r.stats.failure.has_value());
    std::set<std::string> stages;
    for (const auto& st : r.stats.stages) stages.insert(st.stage);
    for (const char* name : {"carve", "absorbers", "absorbing-path", "cover", "close", "validate"}) {
      CHECK(stages.count(name) == 1);
    }
  }
}

TEST_CASE("pipeline on a trimmed random hypergraph") {
  const Hypergraph base = gen_random_hypergraph(200, 3, 0.2, 12);
  const Hypergraph h = adversary_degree_trim(base, 0.4, 13).graph;
  PipelineConfig cfg = PipelineConfig::desk();
  cfg.seed = 14;
  CHECK(found_valid(h, berge_hamilton_resilient(h, cfg), true));
}

TEST_CASE("pipeline reports a stage failure on a bipartition") {
  const Hypergraph h = adversary_bipartition(complete_hypergraph(100, 3), 4).graph;
  const SolveResult r = berge_hamilton_resilient(h, PipelineConfig::desk());
  CHECK(r.status != SolveStatus::found);
  CHECK_FALSE(r.certificate.has_value());
  REQUIRE(r.stats.failure.has_value());
  CHECK_FALSE(r.stats.failure->stage.empty());
  CHECK_FALSE(r.stats.failure->cause.empty());
}
