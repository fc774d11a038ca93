#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "berge/degree.hpp"
#include "berge/generate.hpp"
#include "berge/io.hpp"
#include "berge/rng.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

// K4 with vertices 0..3; ids follow lexicographic order of the sorted edges.
Hypergraph k4() { return complete_hypergraph(4, 3); }

BergePath k4_cycle() {
  return BergePath{{0, 1, 2, 3}, {0, 3, 2, 1}, true, true};
}

}  // namespace

TEST_CASE("hypergraph canonicalizes and rejects bad edges") {
  Hypergraph h(5, 3, {{2, 1, 0}, {4, 3, 0}});
  CHECK(h.num_edges() == 2);
  CHECK(h.edge(0)[0] == 0);
  CHECK(h.edge(1)[2] == 4);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 1}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 5}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1, 2}, {2, 0, 1}}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(5, 3, {{0, 1}}), ParameterError);
  const Hypergraph empty(0, 3, {});
  CHECK(empty.num_edges() == 0);
  const Hypergraph single(3, 3, {{0, 1, 2}});
  CHECK(single.num_edges() == 1);
}

TEST_CASE("incidence index agrees with a rebuild from the edge list") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph h = gen_random_hypergraph(12, 3, 0.3, seed);
    std::size_t total = 0;
    for (Vertex v = 0; v < h.n(); ++v) {
      CHECK(h.degree(v) == oracle::degree(h, v));
      for (EdgeId e : h.incident(v)) CHECK(h.contains(e, v));
      total += h.degree(v);
    }
    CHECK(total == h.r() * h.num_edges());
    const Hypergraph copy(h.n(), h.r(), oracle::edge_list(h));
    CHECK(copy == h);
  }
}

TEST_CASE("generator edge cases and determinism") {
  CHECK(gen_random_hypergraph(5, 3, 1.0, 7).num_edges() == 10);
  CHECK(gen_random_hypergraph(5, 3, 0.0, 7).num_edges() == 0);
  CHECK(gen_random_hypergraph(20, 3, 0.2, 9) == gen_random_hypergraph(20, 3, 0.2, 9));
  CHECK_THROWS_AS(gen_random_hypergraph(5, 3, 1.5, 1), ParameterError);
  CHECK_THROWS_AS(gen_random_hypergraph(2, 3, 0.5, 1), ParameterError);
}

TEST_CASE("generator mean edge count matches the binomial mean") {
  const double mean = 0.1 * 4060.0;
  const double var = 4060.0 * 0.1 * 0.9;
  double sum = 0.0;
  const int seeds = 500;
  for (int s = 0; s < seeds; ++s) sum += gen_random_hypergraph(30, 3, 0.1, 1000 + s).num_edges();
  const double avg = sum / seeds;
  // Standard error of the mean over 500 seeds; 3 sd of one draw is the stated tolerance.
  CHECK(std::abs(avg - 406.0) <= 3.0 * std::sqrt(var));
  CHECK(std::abs(avg - mean) <= 4.0 * std::sqrt(var / seeds));
}

TEST_CASE("sampling path of the generator agrees in distribution") {
  GenOptions opts;
  opts.enumeration_cap = 10;  // force rejection sampling
  double sum = 0.0;
  for (int s = 0; s < 200; ++s) {
    const Hypergraph h = gen_random_hypergraph(30, 3, 0.1, 5000 + s, opts);
    std::set<std::vector<Vertex>> distinct;
    for (const auto& e : oracle::edge_list(h)) distinct.insert(e);
    REQUIRE(distinct.size() == h.num_edges());
    sum += h.num_edges();
  }
  CHECK(std::abs(sum / 200 - 406.0) <= 4.0 * std::sqrt(4060.0 * 0.09 / 200));
}

TEST_CASE("degree examples") {
  const Hypergraph k5 = complete_hypergraph(5, 3);
  CHECK(degree(k5, 0) == 6);
  const std::vector<Vertex> u{1, 2, 3};
  CHECK(degree(k5, 0, u) == 3);
  const Hypergraph single(5, 3, {{0, 1, 2}});
  CHECK(degree(single, 4) == 0);
  CHECK_THROWS_AS(degree(k5, 7), ParameterError);
  const std::vector<Vertex> bad{0, 1};
  CHECK_THROWS_AS(degree(k5, 0, bad), ParameterError);
}

TEST_CASE("restricted degree matches the direct count") {
  Rng rng(3);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Hypergraph h = gen_random_hypergraph(11, 3, 0.4, seed);
    std::vector<Vertex> all(11);
    std::iota(all.begin(), all.end(), 0u);
    std::vector<Vertex> u = rng.sample(std::span<const Vertex>(all), 5);
    for (Vertex v = 0; v < 11; ++v) {
      if (oracle::has(u, v)) continue;
      CHECK(degree(h, v, u) == oracle::restricted_degree(h, v, u));
    }
  }
}

TEST_CASE("collective degree examples") {
  CHECK(max_collective_degree(complete_hypergraph(9, 3), 2).value == 7);
  CHECK(max_collective_degree(Hypergraph(6, 3, {}), 2).value == 0);
  const Hypergraph h(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  const std::vector<Vertex> t{0, 1};
  CHECK(collective_degree(h, t) == 2);
  const std::vector<Vertex> big{0, 1, 2, 3};
  CHECK(collective_degree(h, big) == 0);
}

TEST_CASE("max codegree agrees with a pairwise scan") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph h = gen_random_hypergraph(10, 3, 0.35, seed);
    const CollectiveMax m = max_collective_degree(h, 2);
    CHECK(m.value == oracle::max_codegree(h));
    if (m.value > 0) CHECK(collective_degree(h, m.witness) == m.value);
    CHECK(degree_profile(h).max_collective2 == m.value);
  }
}

TEST_CASE("edges_between examples") {
  const Hypergraph k6 = complete_hypergraph(6, 3);
  const std::vector<Vertex> t0{0}, u123{1, 2, 3}, none{};
  CHECK(edges_between(k6, t0, u123) == 3);
  CHECK(edges_between(k6, none, u123) == 0);
  const Hypergraph h(4, 3, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}});
  const std::vector<Vertex> u12{1, 2};
  CHECK(edges_between(h, t0, u12) == 1);
  const std::vector<Vertex> overlap{0, 1};
  CHECK_THROWS_AS(edges_between(h, t0, overlap), ParameterError);
}

TEST_CASE("K4 cycle is a Berge Hamilton cycle, and the only assignments are the exhaustive ones") {
  const Hypergraph h = k4();
  const WalkReport rep = validate_walk(h, k4_cycle(), WalkMode::berge);
  CHECK(rep.valid);
  CHECK(rep.spanning);
  // Exhaustive edge assignment for the order 0,1,2,3: count assignments of distinct
  // edges to the four consecutive pairs.
  int assignments = 0;
  for (EdgeId a = 0; a < 4; ++a)
    for (EdgeId b = 0; b < 4; ++b)
      for (EdgeId c = 0; c < 4; ++c)
        for (EdgeId d = 0; d < 4; ++d) {
          const BergePath w{{0, 1, 2, 3}, {a, b, c, d}, true, false};
          const bool ok = oracle::certificate_ok(h, w, true);
          CHECK(ok == validate_walk(h, w, WalkMode::berge).valid);
          assignments += ok;
        }
  CHECK(assignments >= 1);
}

TEST_CASE("repeated edge is weak-valid but not Berge-valid") {
  const Hypergraph h = k4();
  BergePath w = k4_cycle();
  w.edges[1] = w.edges[0] = 0;  // {0,1,2} covers both (0,1) and (1,2)
  CHECK(validate_walk(h, w, WalkMode::weak).valid);
  CHECK_FALSE(validate_walk(h, w, WalkMode::berge).valid);
  BergePath bad = k4_cycle();
  bad.edges[1] = 1;  // {0,1,3} does not contain 2
  CHECK_FALSE(validate_walk(h, bad, WalkMode::weak).valid);
  CHECK_FALSE(validate_walk(h, bad, WalkMode::berge).valid);
  CHECK_FALSE(validate_walk(h, bad, WalkMode::berge).first_violation.empty());
}

TEST_CASE("validator fuzzing: corruptions always invalidate") {
  Rng rng(11);
  const Hypergraph h = complete_hypergraph(7, 3);
  const BergePath good{{0, 1, 2, 3, 4, 5, 6},
                       {*h.find_edge(std::vector<Vertex>{0, 1, 2}),
                        *h.find_edge(std::vector<Vertex>{1, 2, 3}),
                        *h.find_edge(std::vector<Vertex>{2, 3, 4}),
                        *h.find_edge(std::vector<Vertex>{3, 4, 5}),
                        *h.find_edge(std::vector<Vertex>{4, 5, 6}),
                        *h.find_edge(std::vector<Vertex>{0, 5, 6}),
                        *h.find_edge(std::vector<Vertex>{0, 1, 6})},
                       true, true};
  REQUIRE(is_hamilton(h, good, WalkMode::berge));
  for (int trial = 0; trial < 500; ++trial) {
    BergePath w = good;
    const auto i = static_cast<std::size_t>(rng.below(7));
    auto j = static_cast<std::size_t>(rng.below(6));
    if (j >= i) ++j;
    if (trial % 2 == 0) {
      w.vertices[i] = w.vertices[j];  // vertex repeated
    } else {
      w.edges[i] = w.edges[j];  // edge id duplicated
    }
    CHECK_FALSE(validate_walk(h, w, WalkMode::berge).valid);
    CHECK(validate_walk(h, w, WalkMode::berge).valid == oracle::certificate_ok(h, w, true));
  }
}

TEST_CASE("path helpers") {
  const BergePath p{{0, 1, 2}, {5, 6}, false, true};
  CHECK(p.reversed().vertices == std::vector<Vertex>{2, 1, 0});
  CHECK(p.reversed().edges == std::vector<EdgeId>{6, 5});
  BergePath q = p;
  q.append(BergePath{{2, 3}, {7}, false, true});
  CHECK(q.vertices.size() == 4);
  CHECK(q.length() == 3);
  CHECK_THROWS(q.append(BergePath{{9, 3}, {7}, false, true}));
  // K3 as a graph: edges {0,1}=0, {0,2}=1, {1,2}=2.
  const Hypergraph tri = complete_hypergraph(3, 2);
  const BergePath c{{0, 1, 2}, {0, 2, 1}, true, true};
  CHECK(validate_walk(tri, c, WalkMode::berge).valid);
  CHECK(validate_walk(tri, c.reversed(), WalkMode::berge).valid);
  CHECK(c.reversed().reversed() == c);
}

TEST_CASE("bipartition adversary") {
  const BipartitionResult b = adversary_bipartition(complete_hypergraph(10, 3), 4);
  CHECK(b.part1.size() == 5);
  CHECK(b.part2.size() == 5);
  for (Vertex v = 0; v < 10; ++v) CHECK(b.graph.degree(v) == 6);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = gen_random_hypergraph(13, 3, 0.5, seed);
    const auto res = adversary_bipartition(g, seed);
    const VertexMask side(13, res.part1);
    CHECK(res.part1.size() + res.part2.size() == 13);
    for (const auto& e : oracle::edge_list(res.graph)) {
      const bool first = side[e[0]];
      for (Vertex x : e) CHECK(side[x] == first);
    }
  }
  CHECK_THROWS_AS(adversary_bipartition(complete_hypergraph(5, 3), 1), ParameterError);
}

TEST_CASE("degree trim adversary") {
  const Hypergraph k8 = complete_hypergraph(8, 3);
  CHECK(adversary_degree_trim(k8, 0.0, 1).graph == k8);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TrimResult t = adversary_degree_trim(k8, 0.5, seed);
    for (Vertex v = 0; v < 8; ++v) {
      CHECK(t.graph.degree(v) >= 11);
      CHECK(t.deletion_fraction[v] <= 0.5);
    }
  }
  const Hypergraph single(3, 3, {{0, 1, 2}});
  CHECK(adversary_degree_trim(single, 1.0, 1).graph.num_edges() <= 1);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = gen_random_hypergraph(15, 3, 0.4, seed);
    const auto t = adversary_degree_trim(g, 0.3, seed);
    for (Vertex v = 0; v < 15; ++v) {
      CHECK(g.degree(v) - t.graph.degree(v) <=
            static_cast<std::size_t>(std::floor(0.3 * static_cast<double>(g.degree(v)))));
    }
    for (const auto& e : oracle::edge_list(t.graph)) CHECK(g.find_edge(e).has_value());
  }
}

TEST_CASE("text format round trip is byte-identical") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Hypergraph h = gen_random_hypergraph(9, 3, 0.3, seed);
    const std::string a = format_hypergraph(h);
    const Hypergraph back = parse_hypergraph("# header\n\n" + a);
    CHECK(back == h);
    CHECK(format_hypergraph(back) == a);
  }
  CHECK_THROWS_AS(parse_hypergraph("4 3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("4 3\n0 1 7\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("x"), ParseError);
}

TEST_CASE("certificate format round trip") {
  const BergePath c = k4_cycle();
  const std::string text = format_certificate(c, WalkMode::berge);
  CHECK(text.rfind("berge-cycle 4\n", 0) == 0);
  const Certificate back = parse_certificate(text);
  CHECK(back.mode == WalkMode::berge);
  CHECK(back.walk.vertices == c.vertices);
  CHECK(back.walk.edges == c.edges);
  CHECK(back.walk.closed);
  const BergePath p{{0, 1}, {0}, false, false};
  CHECK(parse_certificate(format_certificate(p, WalkMode::weak)).mode == WalkMode::weak);
  CHECK_THROWS_AS(parse_certificate("berge-cycle 3\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("loop 2\n0 1\n0\n"), ParseError);
}

TEST_CASE("rng helpers") {
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  CHECK(Rng::derive(1, 2, 3) == Rng::derive(1, 2, 3));
  CHECK(Rng::derive(1, 2, 3) != Rng::derive(1, 3, 2));
  Rng r(9);
  double sum = 0.0;
  for (int i = 0; i < 2000; ++i) sum += static_cast<double>(r.binomial(100, 0.3));
  CHECK(std::abs(sum / 2000 - 30.0) < 4.0 * std::sqrt(21.0 / 2000) + 0.01);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}
