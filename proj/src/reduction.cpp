#include "ordfactor/reduction.hpp"

#include <algorithm>

#include "json.hpp"
#include "ordfactor/error.hpp"
#include "ordfactor/incompat.hpp"

namespace ordfactor {

std::size_t relation_size(const Relation& rel) {
  std::size_t total = 0;
  for (const auto& row : rel) total += row.count();
  return total;
}

bool is_partial_order(const Relation& rel) {
  const auto n = rel.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (rel[a].size() != n || !rel[a].test(a)) return false;
    for (auto b = rel[a].find_first(); b != Bitset::npos; b = rel[a].find_next(b)) {
      if (b != a && rel[b].test(a)) return false;
      if (!rel[b].is_subset_of(rel[a])) return false;
    }
  }
  return true;
}

Poset::Poset(std::vector<std::string> elements, Relation leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  if (leq_.size() != elements_.size() || !is_partial_order(leq_))
    throw Error(Errc::not_a_partial_order, "relation is not reflexive, antisymmetric and transitive");
  std::vector<std::string> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::duplicate_name, "element declared twice");
}

Poset Poset::from_relations(std::vector<std::string> elements,
                            std::span<const std::pair<std::size_t, std::size_t>> relations) {
  const auto n = elements.size();
  Relation rel(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) rel[a].set(a);
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) throw Error(Errc::index_out_of_range, "relation endpoint out of range");
    rel[a].set(b);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (rel[a].test(k)) rel[a] |= rel[k];
  return Poset(std::move(elements), std::move(rel));
}

FormalContext poset_to_context(const Poset& poset) {
  std::vector<Bitset> rows;
  rows.reserve(poset.size());
  for (const auto& row : poset.relation()) rows.push_back(~row);
  return FormalContext(poset.elements(), poset.elements(), std::move(rows));
}

bool has_dimension_at_most_two(const Poset& poset) { return is_two_factorizable(poset_to_context(poset)); }

namespace {

// Linear extension of `poset` inside the complete Ferrers relation `allowed`:
// among minimal remaining elements take the one with the largest row of
// `allowed`, then the smallest index.
std::vector<std::size_t> linearize(const Poset& poset, const Relation& allowed) {
  const auto n = poset.size();
  std::vector<std::size_t> order;
  Bitset placed(n);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (placed.test(x)) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y)
        minimal = placed.test(y) || y == x || !poset.leq(y, x);
      if (!minimal) continue;
      if (pick == n || allowed[x].count() > allowed[pick].count()) pick = x;
    }
    placed.set(pick);
    order.push_back(pick);
  }
  return order;
}

}  // namespace

DimensionExtension two_dimension_extension(const Poset& poset, const SolverOptions& options) {
  const auto n = poset.size();
  const auto ctx = poset_to_context(poset);
  const auto factorization = ord2factor(ctx, options);

  DimensionExtension out;
  out.removal_size = factorization.removed.size();
  out.certificate = factorization.certificate;
  std::array<std::vector<std::size_t>, 2> position;
  const std::array<const PairSet*, 2> factors{&factorization.factor1.pairs, &factorization.factor2.pairs};
  for (std::size_t i = 0; i < 2; ++i) {
    Relation allowed(n, Bitset(n));
    for (auto& row : allowed) row.set();
    for (const auto& p : *factors[i]) allowed[p.object].reset(p.attribute);
    out.realizer[i] = linearize(poset, allowed);
    position[i].resize(n);
    for (std::size_t k = 0; k < n; ++k) position[i][out.realizer[i][k]] = k;
  }
  out.extension.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (position[0][a] <= position[0][b] && position[1][a] <= position[1][b]) out.extension[a].set(b);
  out.added = relation_size(out.extension) - relation_size(poset.relation());
  return out;
}

Poset parse_poset_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("poset JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw Error(Errc::invalid_argument, "poset JSON needs an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(Errc::invalid_argument, "element names must be strings");
    elements.push_back(e.get<std::string>());
  }
  auto index = [&](const nlohmann::json& name) -> std::size_t {
    if (!name.is_string()) throw Error(Errc::invalid_argument, "relation entries must be names");
    auto it = std::find(elements.begin(), elements.end(), name.get<std::string>());
    if (it == elements.end())
      throw Error(Errc::invalid_argument, "unknown element '" + name.get<std::string>() + "'");
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  if (doc.contains("relations")) {
    for (const auto& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2) throw Error(Errc::invalid_argument, "relations are [a, b] pairs");
      relations.emplace_back(index(r[0]), index(r[1]));
    }
  }
  return Poset::from_relations(std::move(elements), relations);
}

}  // namespace ordfactor
