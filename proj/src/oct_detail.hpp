#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordfactor/graph.hpp"

namespace ordfactor::detail {

class Deadline {
 public:
  explicit Deadline(std::optional<std::chrono::milliseconds> limit);
  /// Throws Errc::budget_exceeded once the limit has passed.
  void check() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

/// Lexicographically smallest minimum odd cycle transversal. `upper_bound`
/// is any feasible transversal and only seeds the search.
std::vector<std::size_t> exact_oct(const Graph& graph, const Deadline& deadline,
                                   const std::vector<std::size_t>& upper_bound);

/// Best transversal over seeded local-search restarts; ties broken towards
/// the lexicographically smallest set.
std::vector<std::size_t> heuristic_oct(const Graph& graph, std::uint64_t seed, std::size_t restarts);

}  // namespace ordfactor::detail
