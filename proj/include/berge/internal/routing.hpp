#ifndef BERGE_INTERNAL_ROUTING_HPP
#define BERGE_INTERNAL_ROUTING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "berge/connect.hpp"

namespace berge::detail {

/// Path from a to b (a cycle when a == b) with one inner vertex per block,
/// meeting in the middle block. Blocked vertices and ledger edges are avoided.
std::optional<BergePath> route_pair(const Hypergraph& h, Vertex a, Vertex b,
                                    const std::vector<std::vector<Vertex>>& blocks,
                                    const VertexMask& blocked, const EdgeLedger* exclude);

struct RouteOutcome {
  std::vector<BergePath> paths;
  std::vector<int> path_of;  // per pair, index into paths or -1
};

/// Routes pairs in order, at most one success per group, at most `count` in total.
RouteOutcome route_pairs(const Hypergraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                         const std::vector<std::size_t>& group,
                         const std::vector<std::vector<Vertex>>& blocks, std::size_t count,
                         EdgeLedger& ledger);

void fill_usage(PathSystem& sys);

}  // namespace berge::detail

#endif
