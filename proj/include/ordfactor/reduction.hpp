#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordfactor/context.hpp"
#include "ordfactor/maximal.hpp"

namespace ordfactor {

/// Square boolean relation: `rel[a].test(b)` iff (a, b) is related.
using Relation = std::vector<Bitset>;

std::size_t relation_size(const Relation& rel);
bool is_partial_order(const Relation& rel);

class Poset {
 public:
  Poset() = default;
  /// Throws Errc::not_a_partial_order unless `leq` is reflexive,
  /// antisymmetric and transitive.
  Poset(std::vector<std::string> elements, Relation leq);

  /// Reflexive-transitive closure of `relations`, then validated.
  static Poset from_relations(std::vector<std::string> elements,
                              std::span<const std::pair<std::size_t, std::size_t>> relations);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const Relation& relation() const noexcept { return leq_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a].test(b); }

 private:
  std::vector<std::string> elements_;
  Relation leq_;
};

/// (X, X, not-leq): objects and attributes are the elements.
FormalContext poset_to_context(const Poset& poset);

/// Dimension <= 2 test through the bipartiteness criterion on
/// poset_to_context.
bool has_dimension_at_most_two(const Poset& poset);

struct DimensionExtension {
  std::size_t added = 0;              ///< |extension| - |leq|
  Relation extension;                 ///< intersection of the realizer
  std::array<std::vector<std::size_t>, 2> realizer;  ///< linear orders, least first
  std::size_t removal_size = 0;       ///< |R| of the underlying factorization
  bool certificate = false;
};

/// Two-dimensional extension of `poset` from a maximal factorization of
/// poset_to_context(poset).
DimensionExtension two_dimension_extension(const Poset& poset, const SolverOptions& options = {});

/// Poset JSON: {"elements": [...], "relations": [[a, b], ...]} with names.
Poset parse_poset_json(std::string_view text);

}  // namespace ordfactor
