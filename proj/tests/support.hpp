#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordfactor/context.hpp"
#include "ordfactor/graph.hpp"
#include "ordfactor/reduction.hpp"

namespace testing {

using namespace ordfactor;

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
FormalContext load_fixture(const std::string& name);

IncidencePair pair_of(const FormalContext& ctx, const std::string& object, const std::string& attribute);
PairSet pairs_of(const FormalContext& ctx, const std::vector<std::pair<std::string, std::string>>& names);

/// Context from 0/1 strings, objects "1".."n", attributes "a".."z".
FormalContext small_context(const std::vector<std::string>& rows);

/// The standard example S_n: a_i < b_j iff i != j.
Poset standard_example(std::size_t n);

/// S_3 with random extra comparabilities and shuffled element order; most
/// results keep dimension three.
Poset perturbed_standard_example(std::uint64_t seed);

// Brute-force reference implementations, independent of the library's
// algorithms.
namespace brute {

/// Extents of all concepts, found by closing every object subset.
std::vector<Bitset> concept_extents(const FormalContext& ctx);

/// (g,n) and (h,m) both missing from I.
bool incompatible(const FormalContext& ctx, IncidencePair p, IncidencePair q);

bool ferrers(const PairSet& pairs);

/// Tries both colors for every vertex of the induced subgraph.
bool induced_bipartite(const Graph& graph, const std::vector<bool>& keep);

/// Minimum odd cycle transversal by subset enumeration, smallest first and
/// lexicographically least among those.
std::vector<std::size_t> min_oct(const Graph& graph);

/// Whether some orientation of the edges is a transitive relation.
bool has_transitive_orientation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Dimension <= 2 by trying every pair of linear extensions.
bool dimension_at_most_two(const Poset& poset);

/// Minimum removal making the incompatibility graph bipartite, with graphs
/// rebuilt from the definition for every candidate subset.
std::size_t min_removal(const FormalContext& ctx);

}  // namespace brute

}  // namespace testing
