#include "ordfactor/maximal.hpp"

#include <stdexcept>

#include "oct_detail.hpp"
#include "ordfactor/incompat.hpp"

namespace ordfactor {

OctSolution max_bipartite_subset(const Graph& graph, const SolverOptions& options) {
  OctSolution solution;
  solution.optimal = options.mode == SolveMode::exact;
  if (bipartition(graph).bipartite()) {
    solution.kept.resize(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) solution.kept[v] = v;
    return solution;
  }
  if (options.mode == SolveMode::heuristic) {
    solution.deleted = detail::heuristic_oct(graph, options.seed, options.restarts);
  } else {
    const detail::Deadline deadline(options.time_limit);
    const auto bound = detail::heuristic_oct(graph, options.seed, std::min<std::size_t>(options.restarts, 8));
    solution.deleted = detail::exact_oct(graph, deadline, bound);
  }
  const Bitset deleted = from_indices(graph.size(), solution.deleted);
  solution.kept = to_indices(~deleted);
  return solution;
}

FactorizationResult ord2factor(const FormalContext& ctx, const SolverOptions& options) {
  FormalContext current = ctx;
  auto graph = build_incompatibility_graph(current);
  std::size_t rounds = 0;
  while (!bipartition(graph).bipartite()) {
    // Every round deletes at least one incidence.
    if (rounds >= ctx.incidence_count()) throw std::logic_error("ord2factor: removal loop did not terminate");
    const auto solution = max_bipartite_subset(graph.graph, options);
    current = ctx.with_incidence(graph.pairs_of(solution.kept));
    graph = build_incompatibility_graph(current);
    ++rounds;
  }
  auto result = two_factorize(current);
  result.removed = set_difference(ctx.incidence(), current.incidence());
  result.rounds = rounds;
  result.certificate = rounds == 0 || (rounds == 1 && options.mode == SolveMode::exact);
  return result;
}

bool certify_global_optimality(const FormalContext& ctx, const FactorizationResult& result,
                               const SolverOptions& options) {
  const auto graph = build_incompatibility_graph(ctx);
  if (bipartition(graph).bipartite()) return result.removed.empty();
  SolverOptions exact = options;
  exact.mode = SolveMode::exact;
  const auto first_round = max_bipartite_subset(graph.graph, exact);
  const auto kept = ctx.with_incidence(graph.pairs_of(first_round.kept));
  return first_round.deleted.size() == result.removed.size() && is_two_factorizable(kept);
}

}  // namespace ordfactor
