#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ordfactor/context.hpp"
#include "ordfactor/reduction.hpp"

namespace ordfactor {

struct GeneratorSpec {
  std::size_t objects = 0;
  std::size_t attributes = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
};

struct OracleStats {
  std::uint64_t bipartiteness_tests = 0;
  /// Number of feasible removals of the minimum size.
  std::uint64_t minimum_removals = 0;
};

/// Smallest k <= k_max such that deleting some k incidences leaves a
/// bipartite incompatibility graph; empty if none. Subsets in colex order;
/// the first feasible size is enumerated completely before returning.
std::optional<std::size_t> brute_force_min_removal(const FormalContext& ctx, std::size_t k_max,
                                                   OracleStats* stats = nullptr);

/// Each cell incident independently with probability `density`.
FormalContext random_context(const GeneratorSpec& spec);

/// One random Ferrers relation: nested rows over a random attribute order.
FormalContext random_staircase(const GeneratorSpec& spec);

/// Union of two independent random staircases.
FormalContext random_two_factorizable_context(const GeneratorSpec& spec);

/// Random partial order on n elements: transitive closure of random
/// forward edges over a random permutation.
Poset random_poset(std::size_t elements, double density, std::uint64_t seed);

/// Smallest number of pairs whose addition to `poset` yields a partial order
/// of dimension <= 2, searching added sets up to size `k_max`.
std::optional<std::size_t> brute_force_min_extension(const Poset& poset, std::size_t k_max);

}  // namespace ordfactor
