#include <algorithm>
#include <random>

#include "doctest.h"
#include "ordfactor/error.hpp"
#include "ordfactor/incompat.hpp"
#include "ordfactor/maximal.hpp"
#include "ordfactor/oracle.hpp"
#include "support.hpp"

using namespace ordfactor;
using namespace testing;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

bool kept_is_bipartite(const Graph& g, const OctSolution& s) {
  std::vector<bool> keep(g.size(), false);
  for (auto v : s.kept) keep[v] = true;
  return brute::induced_bipartite(g, keep) && s.kept.size() + s.deleted.size() == g.size();
}

const SolverOptions heuristic{SolveMode::heuristic, std::nullopt, 0, 32};

}  // namespace

TEST_CASE("trivial transversals") {
  Graph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(max_bipartite_subset(path).deleted.empty());

  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  const auto s = max_bipartite_subset(triangle);
  CHECK(s.deleted == std::vector<std::size_t>{0});
  CHECK(s.optimal);
  CHECK(max_bipartite_subset(triangle, heuristic).deleted.size() == 1);
}

TEST_CASE("exact transversal matches brute force") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 4 + seed % 13;
    const auto g = random_graph(n, 0.2 + 0.05 * static_cast<double>(seed % 8), seed);
    const auto exact = max_bipartite_subset(g);
    CAPTURE(seed);
    CHECK(kept_is_bipartite(g, exact));
    CHECK(exact.deleted == brute::min_oct(g));
    const auto approx = max_bipartite_subset(g, heuristic);
    CHECK(kept_is_bipartite(g, approx));
    CHECK(approx.deleted.size() >= exact.deleted.size());
  }
}

TEST_CASE("the seventeen-pair set is an inclusion-minimal transversal") {
  const auto ctx = load_fixture("odd_cycle18.cxt");
  const auto graph = build_incompatibility_graph(ctx);
  const auto removed = pairs_of(ctx, {{"6", "j"}, {"4", "n"}, {"7", "p"}, {"18", "p"}, {"6", "p"}, {"6", "n"},
                                      {"12", "k"}, {"10", "g"}, {"6", "g"}, {"5", "p"}, {"2", "i"}, {"4", "p"},
                                      {"12", "m"}, {"3", "i"}, {"12", "h"}, {"1", "p"}, {"2", "q"}});
  std::vector<bool> keep(graph.vertices.size(), true);
  for (const auto& p : removed) keep[*graph.index_of(p)] = false;
  CHECK(brute::induced_bipartite(graph.graph, keep));
  for (const auto& p : removed) {
    keep[*graph.index_of(p)] = true;
    CHECK_FALSE(brute::induced_bipartite(graph.graph, keep));
    keep[*graph.index_of(p)] = false;
  }
}

TEST_CASE("forum romanum needs exactly two removals") {
  const auto ctx = load_fixture("forum_romanum.cxt");
  const auto result = ord2factor(ctx);
  CHECK(result.removed == pairs_of(ctx, {{"Temple of Romulus", "GB1"}, {"Basilica of Maxentius", "B"}}));
  CHECK(result.certificate);
  CHECK(result.rounds == 1);
  CHECK(validate_factorization(ctx, result).empty());
  CHECK(certify_global_optimality(ctx, result));

  const auto approx = ord2factor(ctx, heuristic);
  CHECK(approx.removed.size() >= 2);
  CHECK(validate_factorization(ctx, approx).empty());
}

TEST_CASE("factorizable contexts need no removal") {
  for (const char* name : {"shared_core.cxt", "contranominal3.cxt"}) {
    const auto ctx = load_fixture(name);
    const auto result = ord2factor(ctx);
    const auto direct = two_factorize(ctx);
    CHECK(result.removed.empty());
    CHECK(result.rounds == 0);
    CHECK(result.certificate);
    CHECK(result.factor1 == direct.factor1);
    CHECK(result.factor2 == direct.factor2);
    CHECK(certify_global_optimality(ctx, result));
  }
}

TEST_CASE("eighteen-element fixture") {
  const auto ctx = load_fixture("odd_cycle18.cxt");
  const auto exact = ord2factor(ctx);
  CHECK(validate_factorization(ctx, exact).empty());
  CHECK(exact.removed.size() == 12);
  CHECK(exact.rounds == 1);
  CHECK(exact.certificate);

  const auto approx = ord2factor(ctx, heuristic);
  CHECK(validate_factorization(ctx, approx).empty());
  CHECK(approx.removed.size() >= exact.removed.size());
  if (approx.rounds >= 2) CHECK_FALSE(approx.certificate);
}

TEST_CASE("exact search honors the time limit") {
  const auto ctx = load_fixture("odd_cycle18.cxt");
  SolverOptions tight;
  tight.time_limit = std::chrono::milliseconds(1);
  try {
    ord2factor(ctx, tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("maximal factorizations of random contexts") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto ctx = random_context({2 + seed % 4, 2 + (seed / 4) % 4, 0.6, seed});
    CAPTURE(seed);
    const auto exact = ord2factor(ctx);
    const auto approx = ord2factor(ctx, heuristic);
    CHECK(validate_factorization(ctx, exact).empty());
    CHECK(validate_factorization(ctx, approx).empty());
    CHECK(approx.removed.size() >= exact.removed.size());
    if (exact.certificate) CHECK(exact.removed.size() == brute::min_removal(ctx));
    if (exact.rounds >= 2) CHECK_FALSE(exact.certificate);
  }
}

TEST_CASE("heuristic results depend only on the seed") {
  const auto ctx = load_fixture("odd_cycle18.cxt");
  const auto graph = build_incompatibility_graph(ctx).graph;
  SolverOptions a = heuristic;
  a.seed = 7;
  CHECK(max_bipartite_subset(graph, a).deleted == max_bipartite_subset(graph, a).deleted);
}
