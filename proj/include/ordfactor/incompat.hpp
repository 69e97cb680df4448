#pragma once

#include <optional>

#include "ordfactor/context.hpp"
#include "ordfactor/graph.hpp"

namespace ordfactor {

/// Incompatibility graph (I, E): vertex i is `vertices[i]`, and
/// {(g,m),(h,n)} is an edge iff (g,n) and (h,m) are both outside I.
struct IncompatibilityGraph {
  PairSet vertices;
  Graph graph;

  std::optional<std::size_t> index_of(IncidencePair p) const;
  PairSet pairs_of(const std::vector<std::size_t>& vertex_indices) const;
};

IncompatibilityGraph build_incompatibility_graph(const FormalContext& ctx);

BipartitionWitness bipartition(const IncompatibilityGraph& graph);
std::vector<std::vector<std::size_t>> components(const IncompatibilityGraph& graph);

/// Degree-0 vertices: the pairs that may lie in both factors.
PairSet isolated_pairs(const IncompatibilityGraph& graph);

/// Bipartiteness of the incompatibility graph, i.e. two-factorizability.
bool is_two_factorizable(const FormalContext& ctx);

}  // namespace ordfactor
