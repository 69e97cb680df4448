#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "ordfactor/bitset.hpp"

namespace ordfactor {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t size() const noexcept { return adjacency_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adjacency_;
};

/// Proper 2-coloring; colors are 1 and 2.
struct Coloring {
  std::vector<int> colors;
};

/// Closed walk v0 v1 ... v(k-1) v0 of odd length k that visits no vertex twice.
struct OddCycle {
  std::vector<std::size_t> vertices;
};

class BipartitionWitness {
 public:
  explicit BipartitionWitness(Coloring c) : value_(std::move(c)) {}
  explicit BipartitionWitness(OddCycle c) : value_(std::move(c)) {}

  bool bipartite() const noexcept { return std::holds_alternative<Coloring>(value_); }
  const std::vector<int>& coloring() const { return std::get<Coloring>(value_).colors; }
  const std::vector<std::size_t>& odd_cycle() const { return std::get<OddCycle>(value_).vertices; }

 private:
  std::variant<Coloring, OddCycle> value_;
};

/// BFS 2-coloring. Each component's smallest vertex gets color 1; on failure
/// the returned odd cycle closes through the BFS tree at the first conflict.
BipartitionWitness bipartition(const Graph& graph);

/// True iff the witness is a proper coloring or a genuine odd cycle of `graph`.
bool verify_witness(const Graph& graph, const BipartitionWitness& witness);

/// Connected components, each sorted, listed by smallest member.
std::vector<std::vector<std::size_t>> components(const Graph& graph);

}  // namespace ordfactor
