#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ordfactor/context.hpp"

namespace ordfactor {

/// A Ferrers subrelation of I: (g,m),(h,n) in F implies (g,n) or (h,m) in F.
struct FerrersFactor {
  PairSet pairs;

  friend bool operator==(const FerrersFactor&, const FerrersFactor&) = default;
};

struct FactorizationResult {
  FerrersFactor factor1;
  FerrersFactor factor2;
  PairSet shared;   ///< core C, contained in both factors
  PairSet removed;  ///< R, incidence left uncovered
  bool certificate = false;
  std::size_t rounds = 0;

  PairSet covered() const { return set_union(factor1.pairs, factor2.pairs); }
};

/// Ferrers test on an arbitrary pair set (no incidence check).
bool is_ferrers_relation(std::span<const IncidencePair> pairs);

/// Throws Errc::pair_not_incident if some pair lies outside I.
bool is_ferrers(const FormalContext& ctx, std::span<const IncidencePair> pairs);

/// Ordinal two-factorization of a two-factorizable context via the conjugate
/// order of the complement's concept lattice. Throws Errc::not_two_factorizable.
FactorizationResult two_factorize(const FormalContext& ctx);

/// Adds the isolated-pair core of the covered context to both factors.
/// Throws Errc::invalid_factorization if `result` does not validate.
FactorizationResult canonical_partition(const FormalContext& ctx, const FactorizationResult& result);

enum class ViolationKind {
  ferrers,
  coverage,
  not_incident,
  shared_core,
  removed,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string_view to_string(ViolationKind kind) noexcept;

/// Empty iff both factors are Ferrers, lie in I minus R, cover it exactly, and
/// the shared core is isolated in the covered context's incompatibility graph.
std::vector<Violation> validate_factorization(const FormalContext& ctx,
                                              const FactorizationResult& result);

}  // namespace ordfactor
