#include "ordfactor/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

#include "ordfactor/error.hpp"

namespace ordfactor {

std::size_t ConceptOrder::bottom() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (leq[i].all()) return i;
  throw Error(Errc::invalid_argument, "concept order has no bottom");
}

std::size_t ConceptOrder::top() const {
  for (std::size_t j = 0; j < size(); ++j) {
    bool is_top = true;
    for (std::size_t i = 0; i < size() && is_top; ++i) is_top = leq[i].test(j);
    if (is_top) return j;
  }
  throw Error(Errc::invalid_argument, "concept order has no top");
}

std::size_t default_concept_budget(const FormalContext& ctx) {
  const auto k = std::min(ctx.object_count(), ctx.attribute_count());
  return 3 * k * k / 2 + 2;
}

std::vector<Concept> enumerate_concepts(const FormalContext& ctx) {
  return enumerate_concepts(ctx, default_concept_budget(ctx));
}

std::vector<Concept> enumerate_concepts(const FormalContext& ctx, std::size_t max_concepts) {
  const auto n = ctx.attribute_count();
  auto closure = [&](const Bitset& attrs) { return ctx.intent(ctx.extent(attrs)); };

  std::vector<Concept> out;
  Bitset intent = closure(Bitset(n));
  while (true) {
    if (out.size() == max_concepts)
      throw Error(Errc::concept_budget_exceeded,
                  "more than " + std::to_string(max_concepts) + " concepts");
    out.push_back({ctx.extent(intent), intent});

    // Lectically next closed set after `intent`.
    bool advanced = false;
    Bitset prefix = intent;
    for (std::size_t i = n; i-- > 0;) {
      if (prefix.test(i)) {
        prefix.reset(i);
        continue;
      }
      Bitset candidate = prefix;
      candidate.set(i);
      candidate = closure(candidate);
      const Bitset added = candidate - prefix;
      if (added.find_first() >= i) {
        intent = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

ConceptOrder concept_order(std::vector<Concept> concepts) {
  const auto n = concepts.size();
  std::vector<Bitset> leq(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (concepts[i].extent.is_subset_of(concepts[j].extent)) leq[i].set(j);
  return {std::move(concepts), std::move(leq)};
}

Graph cocomparability_graph(const ConceptOrder& order) {
  Graph graph(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!order.less_equal(i, j) && !order.less_equal(j, i)) graph.add_edge(i, j);
  return graph;
}

namespace {

bool transitive(const std::vector<Bitset>& rel) {
  for (std::size_t a = 0; a < rel.size(); ++a)
    for (auto b = rel[a].find_first(); b != Bitset::npos; b = rel[a].find_next(b))
      if (!rel[b].is_subset_of(rel[a])) return false;
  return true;
}

}  // namespace

ConjugateOrder transitive_orientation(const Graph& graph) {
  const auto n = graph.size();
  std::vector<Bitset> remaining(n);
  for (std::size_t v = 0; v < n; ++v) remaining[v] = graph.neighbors(v);
  std::vector<Bitset> oriented(n, Bitset(n));

  auto fail = [] {
    return Error(Errc::not_two_dimensional, "cocomparability graph has no transitive orientation");
  };

  // Implication-class decomposition: orient the smallest remaining edge, force
  // its class in the remaining graph, then delete the class.
  for (std::size_t u = 0; u < n; ++u) {
    while (true) {
      const auto v = remaining[u].find_next(u);
      if (v == Bitset::npos) break;
      std::vector<Bitset> cls(n, Bitset(n));
      std::deque<std::pair<std::size_t, std::size_t>> queue;
      cls[u].set(v);
      queue.emplace_back(u, v);
      auto force = [&](std::size_t x, std::size_t y) {
        if (cls[y].test(x)) throw fail();
        if (!cls[x].test(y)) {
          cls[x].set(y);
          queue.emplace_back(x, y);
        }
      };
      while (!queue.empty()) {
        const auto [a, b] = queue.front();
        queue.pop_front();
        Bitset tails = remaining[a] - remaining[b];
        tails.reset(b);
        for_each_bit(tails, [&](std::size_t c) { force(a, c); });
        Bitset heads = remaining[b] - remaining[a];
        heads.reset(a);
        for_each_bit(heads, [&](std::size_t c) { force(c, b); });
      }
      for (std::size_t x = 0; x < n; ++x) {
        for_each_bit(cls[x], [&](std::size_t y) {
          remaining[x].reset(y);
          remaining[y].reset(x);
        });
        oriented[x] |= cls[x];
      }
    }
  }
  if (!transitive(oriented)) throw fail();
  return {std::move(oriented)};
}

std::array<std::vector<std::size_t>, 2> realizer(const ConceptOrder& order, const ConjugateOrder& conj) {
  const auto n = order.size();
  std::array<std::vector<std::size_t>, 2> sequences;
  for (int which = 0; which < 2; ++which) {
    std::vector<Bitset> rel = order.leq;
    for (std::size_t a = 0; a < n; ++a)
      for_each_bit(conj.less[a], [&](std::size_t b) {
        if (which == 0)
          rel[a].set(b);
        else
          rel[b].set(a);
      });
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rel[a].test(b) == rel[b].test(a))
          throw Error(Errc::not_two_dimensional, "union with the conjugate order is not a total order");
    if (!transitive(rel))
      throw Error(Errc::not_two_dimensional, "union with the conjugate order is not transitive");
    // In a linear order the number of strict successors fixes the position.
    auto& seq = sequences[which];
    seq.resize(n);
    for (std::size_t a = 0; a < n; ++a) seq[n - rel[a].count()] = a;
  }
  return sequences;
}

}  // namespace ordfactor
