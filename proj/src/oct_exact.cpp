#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "oct_detail.hpp"
#include "ordfactor/error.hpp"

namespace ordfactor::detail {

Deadline::Deadline(std::optional<std::chrono::milliseconds> limit) {
  if (limit) end_ = std::chrono::steady_clock::now() + *limit;
}

void Deadline::check() const {
  if (end_ && std::chrono::steady_clock::now() > *end_)
    throw Error(Errc::budget_exceeded, "exact odd cycle transversal search ran out of time");
}

namespace {

constexpr std::size_t infeasible = std::numeric_limits<std::size_t>::max() / 4;

struct Key {
  Bitset active;
  Bitset keep;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](const Bitset& b) {
      std::vector<Bitset::block_type> blocks(b.num_blocks());
      boost::to_block_range(b, blocks.begin());
      for (auto w : blocks) h = (h ^ w) * 1099511628211ull + (h >> 29);
    };
    mix(k.active);
    mix(k.keep);
    return h;
  }
};

struct Entry {
  std::size_t lower = 0;
  std::optional<Bitset> best;  // a minimum transversal once known
};

// Branch and bound on odd cycles: some non-kept vertex of every odd cycle must
// be deleted. Branch i deletes the i-th candidate and keeps the earlier ones,
// so branches are disjoint. Vertex-disjoint odd cycles give the lower bound.
class Solver {
 public:
  Solver(const Graph& graph, const Deadline& deadline) : graph_(graph), n_(graph.size()), deadline_(deadline) {}

  std::optional<Bitset> search(Bitset active, Bitset keep, std::size_t budget) {
    tick();
    prune(active);
    keep &= active;
    if (active.none()) return Bitset(n_);
    auto parts = split(active);
    if (parts.size() == 1) return search_connected(active, keep, budget);

    std::vector<std::size_t> bounds;
    std::size_t pending = 0;
    for (const auto& part : parts) {
      bounds.push_back(lower_bound(part, keep & part));
      pending += std::min(bounds.back(), infeasible);
      if (pending > budget) return std::nullopt;
    }
    Bitset result(n_);
    std::size_t used = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      pending -= bounds[i];
      auto sub = search_connected(parts[i], keep & parts[i], budget - used - pending);
      if (!sub) return std::nullopt;
      used += sub->count();
      result |= *sub;
    }
    return result;
  }

 private:
  void tick() {
    if (++nodes_ % 512 == 0) deadline_.check();
  }

  Bitset masked_neighbors(std::size_t v, const Bitset& active) const { return graph_.neighbors(v) & active; }

  // Vertices of degree <= 1 lie on no cycle.
  void prune(Bitset& active) const {
    std::vector<std::size_t> queue;
    for_each_bit(active, [&](std::size_t v) {
      if (masked_neighbors(v, active).count() <= 1) queue.push_back(v);
    });
    while (!queue.empty()) {
      const auto v = queue.back();
      queue.pop_back();
      if (!active.test(v)) continue;
      const auto nb = masked_neighbors(v, active);
      if (nb.count() > 1) continue;
      active.reset(v);
      for_each_bit(nb, [&](std::size_t u) {
        if (masked_neighbors(u, active).count() <= 1) queue.push_back(u);
      });
    }
  }

  std::vector<Bitset> split(const Bitset& active) const {
    std::vector<Bitset> parts;
    Bitset left = active;
    while (left.any()) {
      Bitset part(n_);
      std::vector<std::size_t> stack{left.find_first()};
      part.set(stack.back());
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for_each_bit(masked_neighbors(v, active) - part, [&](std::size_t u) {
          part.set(u);
          stack.push_back(u);
        });
      }
      left -= part;
      parts.push_back(std::move(part));
    }
    return parts;
  }

  // Odd cycle through a BFS tree of `active`, if any.
  std::optional<std::vector<std::size_t>> bfs_odd_cycle(const Bitset& active) const {
    std::vector<int> color(n_, 0);
    std::vector<std::size_t> parent(n_), depth(n_);
    std::vector<std::size_t> queue;
    for (auto root = active.find_first(); root != Bitset::npos; root = active.find_next(root)) {
      if (color[root] != 0) continue;
      color[root] = 1;
      parent[root] = root;
      depth[root] = 0;
      queue.assign(1, root);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const auto u = queue[qi];
        const auto nb = masked_neighbors(u, active);
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
          if (color[w] == 0) {
            color[w] = 3 - color[u];
            parent[w] = u;
            depth[w] = depth[u] + 1;
            queue.push_back(w);
          } else if (color[w] == color[u]) {
            std::vector<std::size_t> a{u}, b{w};
            auto x = u, y = w;
            while (depth[x] > depth[y]) a.push_back(x = parent[x]);
            while (depth[y] > depth[x]) b.push_back(y = parent[y]);
            while (x != y) {
              a.push_back(x = parent[x]);
              b.push_back(y = parent[y]);
            }
            b.pop_back();
            a.insert(a.end(), b.rbegin(), b.rend());
            return a;
          }
        }
      }
    }
    return std::nullopt;
  }

  std::size_t lower_bound(Bitset avail, const Bitset& keep) const {
    std::size_t count = 0;
    // Triangles first, then whatever odd cycles remain.
    for (auto u = avail.find_first(); u != Bitset::npos; u = avail.find_next(u)) {
      bool packed = false;
      const auto nu = masked_neighbors(u, avail);
      for (auto v = nu.find_next(u); v != Bitset::npos && !packed; v = nu.find_next(v)) {
        const auto common = nu & graph_.neighbors(v);
        const auto w = common.find_next(v);
        if (w == Bitset::npos) continue;
        if (keep.test(u) && keep.test(v) && keep.test(w)) return infeasible;
        ++count;
        avail.reset(u);
        avail.reset(v);
        avail.reset(w);
        packed = true;
      }
    }
    while (auto cycle = bfs_odd_cycle(avail)) {
      if (std::all_of(cycle->begin(), cycle->end(), [&](std::size_t v) { return keep.test(v); }))
        return infeasible;
      ++count;
      for (auto v : *cycle) avail.reset(v);
    }
    return count;
  }

  // Triangle with the fewest deletable vertices (then highest degree), else
  // a BFS odd cycle. Deletable vertices are returned by descending degree.
  std::vector<std::size_t> branching_candidates(const Bitset& active, const Bitset& keep) const {
    std::vector<std::size_t> degree(n_, 0);
    for_each_bit(active, [&](std::size_t v) { degree[v] = masked_neighbors(v, active).count(); });

    std::vector<std::size_t> best;
    std::size_t best_free = 4, best_weight = 0;
    for (auto u = active.find_first(); u != Bitset::npos && best_free > 1; u = active.find_next(u)) {
      const auto nu = masked_neighbors(u, active);
      for (auto v = nu.find_next(u); v != Bitset::npos && best_free > 1; v = nu.find_next(v)) {
        const auto common = nu & graph_.neighbors(v);
        for (auto w = common.find_next(v); w != Bitset::npos; w = common.find_next(w)) {
          const std::size_t free = !keep.test(u) + !keep.test(v) + !keep.test(w);
          const std::size_t weight = degree[u] + degree[v] + degree[w];
          if (free < best_free || (free == best_free && weight > best_weight)) {
            best = {u, v, w};
            best_free = free;
            best_weight = weight;
          }
        }
      }
    }
    if (best.empty()) {
      if (auto cycle = bfs_odd_cycle(active)) best = std::move(*cycle);
    }
    std::erase_if(best, [&](std::size_t v) { return keep.test(v); });
    std::stable_sort(best.begin(), best.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    return best;
  }

  std::optional<Bitset> search_connected(const Bitset& active, const Bitset& keep, std::size_t budget) {
    Key key{active, keep};
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      const auto& e = it->second;
      if (e.best) {
        if (e.best->count() <= budget) return e.best;
        return std::nullopt;
      }
      if (e.lower > budget) return std::nullopt;
    }
    auto remember = [&](std::size_t lower, std::optional<Bitset> best) {
      if (memo_.size() > memo_limit) memo_.clear();
      auto& e = memo_[key];
      e.lower = std::max(e.lower, lower);
      if (best) e.best = std::move(best);
    };

    if (!bfs_odd_cycle(active)) {
      remember(0, Bitset(n_));
      return Bitset(n_);
    }
    const auto lower = budget == 0 ? 1 : lower_bound(active, keep);
    if (lower > budget) {
      remember(std::min(lower, infeasible), std::nullopt);
      return std::nullopt;
    }
    const auto candidates = branching_candidates(active, keep);
    std::optional<Bitset> best;
    std::size_t limit = budget;
    Bitset kept = keep;
    for (auto v : candidates) {
      if (limit == 0 || limit < lower) break;
      Bitset next = active;
      next.reset(v);
      auto sub = search(std::move(next), kept, limit - 1);
      if (sub) {
        sub->set(v);
        limit = sub->count() - 1;
        best = std::move(sub);
      }
      kept.set(v);
    }
    if (best)
      remember(best->count(), best);
    else
      remember(budget + 1, std::nullopt);
    return best;
  }

  static constexpr std::size_t memo_limit = 1u << 18;

  const Graph& graph_;
  std::size_t n_;
  const Deadline& deadline_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Key, Entry, KeyHash> memo_;

 public:
  // Lexicographically smallest minimum transversal of one component: fix
  // vertices in ascending order, deleting each one whenever a minimum
  // solution consistent with the earlier decisions still exists.
  Bitset lexmin(const Bitset& part, const Bitset& upper_bound) {
    auto found = search(part, Bitset(n_), upper_bound.count());
    if (!found) throw Error(Errc::invalid_argument, "upper bound is not a transversal");
    const auto k = found->count();
    Bitset witness = *found;
    Bitset deleted(n_), keep(n_);
    for (auto v = part.find_first(); v != Bitset::npos && deleted.count() < k; v = part.find_next(v)) {
      if (witness.test(v)) {
        deleted.set(v);
        continue;
      }
      Bitset rest = part - deleted;
      rest.reset(v);
      auto sub = search(std::move(rest), keep, k - deleted.count() - 1);
      if (sub) {
        deleted.set(v);
        witness = deleted | *sub;
      } else {
        keep.set(v);
      }
    }
    return deleted;
  }
};

}  // namespace

std::vector<std::size_t> exact_oct(const Graph& graph, const Deadline& deadline,
                                   const std::vector<std::size_t>& upper_bound) {
  const auto n = graph.size();
  Solver solver(graph, deadline);
  const Bitset hint = from_indices(n, upper_bound);
  Bitset result(n);
  for (const auto& members : components(graph)) {
    const Bitset part = from_indices(n, members);
    result |= solver.lexmin(part, hint & part);
  }
  return to_indices(result);
}

}  // namespace ordfactor::detail
