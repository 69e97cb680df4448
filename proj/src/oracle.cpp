#include "ordfactor/oracle.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "ordfactor/incompat.hpp"

namespace ordfactor {

namespace {

// Advances `c` (strictly increasing, values < n) to the next k-subset in
// colex order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const auto k = c.size();
  for (std::size_t j = 0; j < k; ++j) {
    const auto limit = j + 1 < k ? c[j + 1] : n;
    if (c[j] + 1 < limit) {
      ++c[j];
      for (std::size_t i = 0; i < j; ++i) c[i] = i;
      return true;
    }
  }
  return false;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

std::vector<Bitset> staircase_rows(const GeneratorSpec& spec, std::mt19937_64& rng) {
  const auto order = shuffled(spec.attributes, rng);
  std::vector<Bitset> rows(spec.objects, Bitset(spec.attributes));
  for (auto& row : rows) {
    std::size_t height = 0;
    for (std::size_t m = 0; m < spec.attributes; ++m) height += unit(rng) < spec.density;
    for (std::size_t m = 0; m < height; ++m) row.set(order[m]);
  }
  return rows;
}

}  // namespace

std::optional<std::size_t> brute_force_min_removal(const FormalContext& ctx, std::size_t k_max,
                                                   OracleStats* stats) {
  const auto incidence = ctx.incidence();
  const auto n = incidence.size();
  for (std::size_t k = 0; k <= std::min(k_max, n); ++k) {
    std::vector<std::size_t> chosen(k);
    std::iota(chosen.begin(), chosen.end(), 0);
    std::uint64_t hits = 0;
    do {
      PairSet removal;
      for (auto i : chosen) removal.push_back(incidence[i]);
      if (stats) ++stats->bipartiteness_tests;
      if (is_two_factorizable(remove_incidences(ctx, removal))) ++hits;
    } while (next_combination(chosen, n));
    if (hits > 0) {
      if (stats) stats->minimum_removals = hits;
      return k;
    }
  }
  return std::nullopt;
}

FormalContext random_context(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Bitset> rows(spec.objects, Bitset(spec.attributes));
  for (auto& row : rows)
    for (std::size_t m = 0; m < spec.attributes; ++m)
      if (unit(rng) < spec.density) row.set(m);
  return FormalContext(numbered("g", spec.objects), numbered("m", spec.attributes), std::move(rows));
}

FormalContext random_staircase(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  return FormalContext(numbered("g", spec.objects), numbered("m", spec.attributes),
                       staircase_rows(spec, rng));
}

FormalContext random_two_factorizable_context(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  auto rows = staircase_rows(spec, rng);
  const auto second = staircase_rows(spec, rng);
  for (std::size_t g = 0; g < rows.size(); ++g) rows[g] |= second[g];
  FormalContext ctx(numbered("g", spec.objects), numbered("m", spec.attributes), std::move(rows));
  if (!is_two_factorizable(ctx))
    throw std::logic_error("union of two staircases has a non-bipartite incompatibility graph");
  return ctx;
}

Poset random_poset(std::size_t elements, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto perm = shuffled(elements, rng);
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t i = 0; i < elements; ++i)
    for (std::size_t j = i + 1; j < elements; ++j)
      if (unit(rng) < density) relations.emplace_back(perm[i], perm[j]);
  return Poset::from_relations(numbered("p", elements), relations);
}

std::optional<std::size_t> brute_force_min_extension(const Poset& poset, std::size_t k_max) {
  const auto n = poset.size();
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && !poset.leq(a, b) && !poset.leq(b, a)) candidates.emplace_back(a, b);
  for (std::size_t k = 0; k <= std::min(k_max, candidates.size()); ++k) {
    std::vector<std::size_t> chosen(k);
    std::iota(chosen.begin(), chosen.end(), 0);
    do {
      Relation rel = poset.relation();
      for (auto i : chosen) rel[candidates[i].first].set(candidates[i].second);
      if (!is_partial_order(rel)) continue;
      if (has_dimension_at_most_two(Poset(poset.elements(), std::move(rel)))) return k;
    } while (next_combination(chosen, candidates.size()));
  }
  return std::nullopt;
}

}  // namespace ordfactor
