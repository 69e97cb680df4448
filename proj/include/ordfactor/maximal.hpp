#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordfactor/context.hpp"
#include "ordfactor/graph.hpp"
#include "ordfactor/twofactor.hpp"

namespace ordfactor {

enum class SolveMode { exact, heuristic };

struct SolverOptions {
  SolveMode mode = SolveMode::exact;
  /// Wall-clock limit for exact search; unlimited when empty.
  std::optional<std::chrono::milliseconds> time_limit;
  std::uint64_t seed = 0;
  /// Restarts of the heuristic local search.
  std::size_t restarts = 32;
};

/// Vertex split into a bipartite-inducing kept set and its complement.
struct OctSolution {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> deleted;
  bool optimal = false;
};

/// Maximum induced bipartite subgraph. Exact mode returns the
/// lexicographically smallest minimum odd cycle transversal and throws
/// Errc::budget_exceeded past the time limit; heuristic mode always returns.
OctSolution max_bipartite_subset(const Graph& graph, const SolverOptions& options = {});

/// Repeats OCT removal until the incompatibility graph is bipartite, then
/// factorizes. `certificate` is set when the result is provably maximal:
/// no removal was needed, or a single exact round sufficed.
FactorizationResult ord2factor(const FormalContext& ctx, const SolverOptions& options = {});

/// Recomputes the first exact round on `ctx` and reports whether its kept
/// incidence is already two-factorizable and matches `result`'s removal size.
bool certify_global_optimality(const FormalContext& ctx, const FactorizationResult& result,
                               const SolverOptions& options = {});

}  // namespace ordfactor
