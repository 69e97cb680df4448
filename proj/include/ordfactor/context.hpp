#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordfactor/bitset.hpp"

namespace ordfactor {

/// An element (g, m) of G x M, addressed by declaration indices.
struct IncidencePair {
  std::size_t object = 0;
  std::size_t attribute = 0;

  friend auto operator<=>(const IncidencePair&, const IncidencePair&) = default;
};

/// Sorted, duplicate-free set of pairs. All set-valued results use this form.
using PairSet = std::vector<IncidencePair>;

PairSet normalized(PairSet pairs);
PairSet set_union(const PairSet& a, const PairSet& b);
PairSet set_intersection(const PairSet& a, const PairSet& b);
PairSet set_difference(const PairSet& a, const PairSet& b);
bool is_subset(const PairSet& a, const PairSet& b);

enum class Side { objects, attributes };

/// A formal context (G, M, I). Rows are stored as attribute bitsets, columns
/// as object bitsets; both are kept in sync at construction and never mutated.
class FormalContext {
 public:
  FormalContext() = default;

  /// Throws Errc::duplicate_name, Errc::count_mismatch or Errc::invalid_argument
  /// (empty names).
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<Bitset> rows, std::string title = {});

  static FormalContext from_pairs(std::vector<std::string> objects,
                                  std::vector<std::string> attributes,
                                  std::span<const IncidencePair> pairs,
                                  std::string title = {});

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const std::string& title() const noexcept { return title_; }

  bool incident(std::size_t object, std::size_t attribute) const;
  bool incident(IncidencePair p) const { return incident(p.object, p.attribute); }
  const Bitset& row(std::size_t object) const { return rows_.at(object); }
  const Bitset& column(std::size_t attribute) const { return columns_.at(attribute); }

  std::size_t incidence_count() const noexcept { return incidence_count_; }
  /// I in lexicographic (object, attribute) order.
  PairSet incidence() const;

  /// A' for a set of objects A.
  Bitset intent(const Bitset& objects) const;
  /// B' for a set of attributes B.
  Bitset extent(const Bitset& attributes) const;

  std::optional<std::size_t> object_index(std::string_view name) const;
  std::optional<std::size_t> attribute_index(std::string_view name) const;

  /// Same G and M (and title) with I replaced by `pairs`.
  FormalContext with_incidence(std::span<const IncidencePair> pairs) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b);

 private:
  std::string title_;
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<Bitset> rows_;
  std::vector<Bitset> columns_;
  std::size_t incidence_count_ = 0;
};

/// Parses the Burmeister `.cxt` format. Accepts `X`/`x` for crosses and `.`
/// for blanks; tolerates whitespace-only lines between sections.
FormalContext parse_cxt(std::string_view text);

/// Writes the Burmeister `.cxt` format with `X`/`.` and `\n` line ends.
std::string serialize_cxt(const FormalContext& ctx);

/// Derivation operator on index lists. Returns the sorted derived index set.
std::vector<std::size_t> derive(const FormalContext& ctx, Side side,
                                std::span<const std::size_t> subset);

FormalContext complement(const FormalContext& ctx);

/// Deletes `pairs` from I. Every pair must currently be incident.
FormalContext remove_incidences(const FormalContext& ctx, std::span<const IncidencePair> pairs);

}  // namespace ordfactor
