#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace testing {

std::string fixture_path(const std::string& name) { return std::string(ORDFACTOR_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FormalContext load_fixture(const std::string& name) { return parse_cxt(read_file(fixture_path(name))); }

IncidencePair pair_of(const FormalContext& ctx, const std::string& object, const std::string& attribute) {
  const auto g = ctx.object_index(object);
  const auto m = ctx.attribute_index(attribute);
  if (!g || !m) throw std::runtime_error("unknown pair (" + object + ", " + attribute + ")");
  return {*g, *m};
}

PairSet pairs_of(const FormalContext& ctx, const std::vector<std::pair<std::string, std::string>>& names) {
  PairSet out;
  for (const auto& [g, m] : names) out.push_back(pair_of(ctx, g, m));
  return normalized(std::move(out));
}

FormalContext small_context(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::string> objects, attributes;
  for (std::size_t g = 0; g < rows.size(); ++g) objects.push_back(std::to_string(g + 1));
  for (std::size_t m = 0; m < cols; ++m) attributes.push_back(std::string(1, static_cast<char>('a' + m)));
  std::vector<Bitset> bits;
  for (const auto& row : rows) {
    Bitset b(cols);
    for (std::size_t m = 0; m < cols; ++m)
      if (row[m] == '1' || row[m] == 'X') b.set(m);
    bits.push_back(b);
  }
  return FormalContext(objects, attributes, bits);
}

Poset standard_example(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) rel.emplace_back(i, n + j);
  return Poset::from_relations(names, rel);
}

Poset perturbed_standard_example(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto base = standard_example(3);
  const std::size_t n = base.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Relation rel(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (base.leq(a, b)) rel[perm[a]].set(perm[b]);
  const auto extra = rng() % 3;
  for (std::size_t i = 0; i < extra; ++i) {
    const auto a = rng() % n, b = rng() % n;
    if (a == b || rel[b].test(a)) continue;
    Relation next = rel;
    next[a].set(b);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x)
        if (next[x].test(k)) next[x] |= next[k];
    if (is_partial_order(next)) rel = std::move(next);
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[perm[i]] = base.elements()[i];
  return Poset(names, rel);
}

namespace brute {

std::vector<Bitset> concept_extents(const FormalContext& ctx) {
  const auto n = ctx.object_count();
  const auto k = ctx.attribute_count();
  std::vector<Bitset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // A'' computed cell by cell.
    std::vector<bool> intent(k, true);
    for (std::size_t g = 0; g < n; ++g)
      if (mask >> g & 1)
        for (std::size_t m = 0; m < k; ++m) intent[m] = intent[m] && ctx.incident(g, m);
    Bitset extent(n);
    for (std::size_t g = 0; g < n; ++g) {
      bool all = true;
      for (std::size_t m = 0; m < k; ++m) all = all && (!intent[m] || ctx.incident(g, m));
      if (all) extent.set(g);
    }
    if (std::find(out.begin(), out.end(), extent) == out.end()) out.push_back(extent);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool incompatible(const FormalContext& ctx, IncidencePair p, IncidencePair q) {
  return !ctx.incident(p.object, q.attribute) && !ctx.incident(q.object, p.attribute);
}

bool ferrers(const PairSet& pairs) {
  auto has = [&](IncidencePair p) { return std::binary_search(pairs.begin(), pairs.end(), p); };
  for (const auto& p : pairs)
    for (const auto& q : pairs)
      if (!has({p.object, q.attribute}) && !has({q.object, p.attribute})) return false;
  return true;
}

bool induced_bipartite(const Graph& graph, const std::vector<bool>& keep) {
  const auto n = graph.size();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (!keep[s] || color[s] >= 0) continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        if (!keep[u] || !graph.adjacent(v, u)) continue;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::size_t> min_oct(const Graph& graph) {
  const auto n = graph.size();
  if (n > 20) throw std::invalid_argument("brute::min_oct is limited to 20 vertices");
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    // prev_permutation on a true-first mask walks subsets in lexicographic order.
    do {
      std::vector<bool> keep(n);
      for (std::size_t v = 0; v < n; ++v) keep[v] = !pick[v];
      if (induced_bipartite(graph, keep)) {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n; ++v)
          if (pick[v]) out.push_back(v);
        return out;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {};
}

bool has_transitive_orientation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const auto m = edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if (mask >> e & 1) std::swap(u, v);
      rel[u][v] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (rel[a][b] && rel[b][c] && !rel[a][c]) transitive = false;
    if (transitive) return true;
  }
  return false;
}

bool dimension_at_most_two(const Poset& poset) {
  const auto n = poset.size();
  std::vector<std::vector<std::size_t>> extensions;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (poset.leq(perm[j], perm[i])) ok = false;
    if (ok) {
      std::vector<std::size_t> pos(n);
      for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
      extensions.push_back(pos);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& p : extensions)
    for (const auto& q : extensions) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = 0; b < n && ok; ++b)
          if (a != b && p[a] < p[b] && q[a] < q[b] && !poset.leq(a, b)) ok = false;
      if (ok) return true;
    }
  return false;
}

std::size_t min_removal(const FormalContext& ctx) {
  const auto incidence = ctx.incidence();
  const auto n = incidence.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      PairSet kept;
      for (std::size_t i = 0; i < n; ++i)
        if (!pick[i]) kept.push_back(incidence[i]);
      const auto reduced = ctx.with_incidence(kept);
      Graph g(kept.size());
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
          if (incompatible(reduced, kept[i], kept[j])) g.add_edge(i, j);
      if (induced_bipartite(g, std::vector<bool>(kept.size(), true))) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

}  // namespace brute

}  // namespace testing
