#include "ordfactor/twofactor.hpp"

#include <algorithm>

#include "ordfactor/error.hpp"
#include "ordfactor/incompat.hpp"
#include "ordfactor/lattice.hpp"

namespace ordfactor {

bool is_ferrers_relation(std::span<const IncidencePair> pairs) {
  // Ferrers iff the rows, restricted to the relation, form an inclusion chain.
  const PairSet sorted = normalized(PairSet(pairs.begin(), pairs.end()));
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i].object != sorted[i - 1].object) rows.emplace_back();
    rows.back().push_back(sorted[i].attribute);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!std::includes(rows[i - 1].begin(), rows[i - 1].end(), rows[i].begin(), rows[i].end()))
      return false;
  return true;
}

bool is_ferrers(const FormalContext& ctx, std::span<const IncidencePair> pairs) {
  for (const auto& p : pairs) {
    if (p.object >= ctx.object_count() || p.attribute >= ctx.attribute_count())
      throw Error(Errc::index_out_of_range, "pair outside G x M");
    if (!ctx.incident(p))
      throw Error(Errc::pair_not_incident, "(" + ctx.objects()[p.object] + ", " +
                                               ctx.attributes()[p.attribute] + ") is not in I");
  }
  return is_ferrers_relation(pairs);
}

namespace {

// factor1 is the factor whose smallest exclusive pair is smaller.
void label_factors(FactorizationResult& r) {
  const auto only1 = set_difference(r.factor1.pairs, r.factor2.pairs);
  const auto only2 = set_difference(r.factor2.pairs, r.factor1.pairs);
  const bool swap = only1.empty() ? !only2.empty() : (!only2.empty() && only2.front() < only1.front());
  if (swap) std::swap(r.factor1, r.factor2);
}

PairSet complement_of_sweep(const FormalContext& ctx, const ConceptOrder& order,
                            const std::vector<std::size_t>& sequence) {
  std::vector<Bitset> covered(ctx.object_count(), Bitset(ctx.attribute_count()));
  Bitset accumulated(ctx.object_count());
  for (auto c : sequence) {
    accumulated |= order.concepts[c].extent;
    for_each_bit(accumulated, [&](std::size_t g) { covered[g] |= order.concepts[c].intent; });
  }
  PairSet factor;
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      if (!covered[g].test(m)) {
        if (!ctx.incident(g, m))
          throw Error(Errc::not_two_factorizable, "sweep produced a pair outside I");
        factor.push_back({g, m});
      }
  return factor;
}

}  // namespace

FactorizationResult two_factorize(const FormalContext& ctx) {
  FactorizationResult result;
  result.certificate = true;
  if (ctx.incidence_count() == 0) return result;
  if (!is_two_factorizable(ctx))
    throw Error(Errc::not_two_factorizable, "incompatibility graph is not bipartite");

  const auto order = concept_order(enumerate_concepts(complement(ctx)));
  std::array<std::vector<std::size_t>, 2> sequences;
  try {
    sequences = realizer(order, transitive_orientation(cocomparability_graph(order)));
  } catch (const Error& e) {
    if (e.code() != Errc::not_two_dimensional) throw;
    throw Error(Errc::not_two_factorizable, e.what());
  }
  result.factor1.pairs = complement_of_sweep(ctx, order, sequences[0]);
  result.factor2.pairs = complement_of_sweep(ctx, order, sequences[1]);
  if (result.covered() != ctx.incidence())
    throw Error(Errc::not_two_factorizable, "factors do not cover I");
  result.shared = set_intersection(result.factor1.pairs, result.factor2.pairs);
  label_factors(result);
  return result;
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::ferrers: return "FerrersViolation";
    case ViolationKind::coverage: return "CoverageViolation";
    case ViolationKind::not_incident: return "NotIncidentViolation";
    case ViolationKind::shared_core: return "SharedCoreViolation";
    case ViolationKind::removed: return "RemovedViolation";
  }
  return "Unknown";
}

std::vector<Violation> validate_factorization(const FormalContext& ctx, const FactorizationResult& result) {
  std::vector<Violation> out;
  const auto in_range = [&](const PairSet& s) {
    return std::all_of(s.begin(), s.end(), [&](const IncidencePair& p) {
      return p.object < ctx.object_count() && p.attribute < ctx.attribute_count();
    });
  };
  for (const auto* s : {&result.factor1.pairs, &result.factor2.pairs, &result.shared, &result.removed})
    if (!in_range(*s)) {
      out.push_back({ViolationKind::not_incident, "pair outside G x M"});
      return out;
    }
  const auto incidence = ctx.incidence();
  const auto removed = normalized(result.removed);
  if (!is_subset(removed, incidence))
    out.push_back({ViolationKind::removed, "removed pairs outside I"});
  const auto covered = set_difference(incidence, removed);
  const auto f1 = normalized(result.factor1.pairs);
  const auto f2 = normalized(result.factor2.pairs);
  if (!is_subset(f1, covered)) out.push_back({ViolationKind::not_incident, "factor1 leaves I \\ R"});
  if (!is_subset(f2, covered)) out.push_back({ViolationKind::not_incident, "factor2 leaves I \\ R"});
  if (set_union(f1, f2) != covered)
    out.push_back({ViolationKind::coverage, "factor1 and factor2 do not cover I \\ R"});
  if (!is_ferrers_relation(f1)) out.push_back({ViolationKind::ferrers, "factor1 is not Ferrers"});
  if (!is_ferrers_relation(f2)) out.push_back({ViolationKind::ferrers, "factor2 is not Ferrers"});
  const auto shared = normalized(result.shared);
  if (!is_subset(shared, set_intersection(f1, f2)))
    out.push_back({ViolationKind::shared_core, "shared pairs missing from a factor"});
  if (!shared.empty() && is_subset(shared, covered)) {
    const auto isolated = isolated_pairs(build_incompatibility_graph(ctx.with_incidence(covered)));
    if (!is_subset(shared, isolated))
      out.push_back({ViolationKind::shared_core, "shared pair is not isolated in the incompatibility graph"});
  } else if (!shared.empty()) {
    out.push_back({ViolationKind::shared_core, "shared pairs outside I \\ R"});
  }
  return out;
}

FactorizationResult canonical_partition(const FormalContext& ctx, const FactorizationResult& result) {
  auto fail_if_invalid = [&](const FactorizationResult& r) {
    const auto violations = validate_factorization(ctx, r);
    if (!violations.empty()) throw Error(Errc::invalid_factorization, violations.front().detail);
  };
  fail_if_invalid(result);
  const auto covered = set_difference(ctx.incidence(), normalized(result.removed));
  const auto core = isolated_pairs(build_incompatibility_graph(ctx.with_incidence(covered)));

  FactorizationResult out = result;
  out.factor1.pairs = set_union(normalized(result.factor1.pairs), core);
  out.factor2.pairs = set_union(normalized(result.factor2.pairs), core);
  out.shared = core;
  out.removed = normalized(result.removed);
  fail_if_invalid(out);
  label_factors(out);
  return out;
}

}  // namespace ordfactor
