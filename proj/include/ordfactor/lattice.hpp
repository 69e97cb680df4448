#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ordfactor/context.hpp"
#include "ordfactor/graph.hpp"

namespace ordfactor {

struct Concept {
  Bitset extent;
  Bitset intent;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// Concepts ordered by extent inclusion. `leq[i]` holds every j with
/// concepts[i] <= concepts[j].
struct ConceptOrder {
  std::vector<Concept> concepts;
  std::vector<Bitset> leq;

  std::size_t size() const noexcept { return concepts.size(); }
  bool less_equal(std::size_t i, std::size_t j) const { return leq[i].test(j); }
  std::size_t bottom() const;
  std::size_t top() const;
};

/// Strict order orienting every incomparable pair of a ConceptOrder.
/// `less[i]` holds every j with i <_c j.
struct ConjugateOrder {
  std::vector<Bitset> less;

  bool precedes(std::size_t i, std::size_t j) const { return less[i].test(j); }
};

/// Upper bound on the concept count of a two-dimensional lattice:
/// floor(3/2 * min(|G|,|M|)^2) + 2.
std::size_t default_concept_budget(const FormalContext& ctx);

/// NextClosure over attributes: all concepts in lectic order of intents.
/// Throws Errc::concept_budget_exceeded beyond `max_concepts`.
std::vector<Concept> enumerate_concepts(const FormalContext& ctx, std::size_t max_concepts);
std::vector<Concept> enumerate_concepts(const FormalContext& ctx);

ConceptOrder concept_order(std::vector<Concept> concepts);

Graph cocomparability_graph(const ConceptOrder& order);

/// Transitive orientation by implication-class decomposition, verified for
/// transitivity. Throws Errc::not_two_dimensional if none exists.
ConjugateOrder transitive_orientation(const Graph& graph);

/// The two linear extensions `order ∪ conj` and `order ∪ conj^-1`, each as a
/// sequence of concept indices from least to greatest. Throws
/// Errc::not_two_dimensional unless both unions are total orders.
std::array<std::vector<std::size_t>, 2> realizer(const ConceptOrder& order,
                                                 const ConjugateOrder& conj);

}  // namespace ordfactor
