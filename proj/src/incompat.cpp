#include "ordfactor/incompat.hpp"

#include <algorithm>

namespace ordfactor {

std::optional<std::size_t> IncompatibilityGraph::index_of(IncidencePair p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

PairSet IncompatibilityGraph::pairs_of(const std::vector<std::size_t>& vertex_indices) const {
  PairSet out;
  out.reserve(vertex_indices.size());
  for (auto i : vertex_indices) out.push_back(vertices.at(i));
  return normalized(std::move(out));
}

IncompatibilityGraph build_incompatibility_graph(const FormalContext& ctx) {
  IncompatibilityGraph result{ctx.incidence(), Graph(ctx.incidence_count())};
  const auto& v = result.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto [g, m] = v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const auto [h, n] = v[j];
      if (!ctx.incident(g, n) && !ctx.incident(h, m)) result.graph.add_edge(i, j);
    }
  }
  return result;
}

BipartitionWitness bipartition(const IncompatibilityGraph& graph) { return bipartition(graph.graph); }

std::vector<std::vector<std::size_t>> components(const IncompatibilityGraph& graph) {
  return components(graph.graph);
}

PairSet isolated_pairs(const IncompatibilityGraph& graph) {
  PairSet out;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    if (graph.graph.neighbors(i).none()) out.push_back(graph.vertices[i]);
  return out;
}

bool is_two_factorizable(const FormalContext& ctx) {
  return bipartition(build_incompatibility_graph(ctx)).bipartite();
}

}  // namespace ordfactor
