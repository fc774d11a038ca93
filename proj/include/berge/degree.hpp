#ifndef BERGE_DEGREE_HPP
#define BERGE_DEGREE_HPP

#include <optional>
#include <span>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

struct DegreeProfile {
  std::vector<std::size_t> per_vertex;
  std::size_t min = 0;              // delta_1
  std::size_t max_collective2 = 0;  // Delta_2
};

DegreeProfile degree_profile(const Hypergraph& h);

std::size_t degree(const Hypergraph& h, Vertex v);

/// Edges e containing v with e \ {v} inside U. U must not contain v.
std::size_t degree(const Hypergraph& h, Vertex v, std::span<const Vertex> u);

/// Mask form of the above; no disjointness check.
std::size_t degree_into(const Hypergraph& h, Vertex v, const VertexMask& u);

/// Number of edges containing every vertex of T (0 when |T| > r).
std::size_t collective_degree(const Hypergraph& h, std::span<const Vertex> t);

struct CollectiveMax {
  std::size_t value = 0;
  std::vector<Vertex> witness;  // a maximizing l-set, empty when value is 0
};

/// Max over l-sets of collective_degree, found by iterating edges.
CollectiveMax max_collective_degree(const Hypergraph& h, unsigned l);

/// Edges with exactly one vertex in T and r-1 vertices in U. T, U disjoint.
std::size_t edges_between(const Hypergraph& h, std::span<const Vertex> t,
                          std::span<const Vertex> u);

}  // namespace berge

#endif
