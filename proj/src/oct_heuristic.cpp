#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>

#include "oct_detail.hpp"

namespace ordfactor::detail {

namespace {

/// side[v] is 0 or 1 for kept vertices and -1 for deleted ones.
using Placement = std::vector<int>;

Placement local_search(const Graph& graph, std::mt19937_64& rng) {
  const auto n = graph.size();
  std::vector<int> color(n);
  Bitset alive(n);
  alive.set();
  for (auto& c : color) c = static_cast<int>(rng() & 1u);

  auto same_color = [&](std::size_t v, int c) {
    std::size_t count = 0;
    for_each_bit(graph.neighbors(v) & alive, [&](std::size_t u) { count += color[u] == c; });
    return count;
  };
  std::vector<std::size_t> conflicts(n);
  for (std::size_t v = 0; v < n; ++v) conflicts[v] = same_color(v, color[v]);

  // Each step strictly lowers the number of monochromatic edges.
  std::vector<std::size_t> worst;
  while (true) {
    std::size_t top = 0;
    worst.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive.test(v) || conflicts[v] < top || conflicts[v] == 0) continue;
      if (conflicts[v] > top) {
        top = conflicts[v];
        worst.clear();
      }
      worst.push_back(v);
    }
    if (top == 0) break;
    const auto v = worst[rng() % worst.size()];
    const auto opposite = same_color(v, 1 - color[v]);
    const auto nb = graph.neighbors(v) & alive;
    if (opposite < conflicts[v]) {
      for_each_bit(nb, [&](std::size_t u) {
        if (color[u] == color[v])
          --conflicts[u];
        else
          ++conflicts[u];
      });
      color[v] = 1 - color[v];
      conflicts[v] = opposite;
    } else {
      for_each_bit(nb, [&](std::size_t u) {
        if (color[u] == color[v]) --conflicts[u];
      });
      alive.reset(v);
      conflicts[v] = 0;
    }
  }

  Placement side(n, -1);
  for_each_bit(alive, [&](std::size_t v) { side[v] = color[v]; });
  return side;
}

/// Vertex cover local search with edge weighting and configuration checking
/// on the slot graph: one slot per (vertex, side), joining the two slots of a
/// vertex and same-side slots of adjacent vertices. Independent slot sets are
/// exactly bipartite placements, so a small cover means few deletions.
class SlotCover {
 public:
  SlotCover(const Graph& graph, const Placement& start) : n_(graph.size()), adj_(2 * n_) {
    for (std::size_t v = 0; v < n_; ++v) link(slot(v, 0), slot(v, 1));
    for (auto [u, v] : graph.edges())
      for (int s : {0, 1}) link(slot(u, s), slot(v, s));
    weight_.assign(ends_.size(), 1);
    total_weight_ = ends_.size();
    position_.assign(ends_.size(), npos);
    in_cover_.assign(2 * n_, true);
    for (std::size_t v = 0; v < n_; ++v)
      if (start[v] >= 0) in_cover_[slot(v, start[v])] = false;
    cover_size_ = 0;
    for (bool c : in_cover_) cover_size_ += c;
    score_.assign(2 * n_, 0);
    rescore();
    confirmed_.assign(2 * n_, true);
    age_.assign(2 * n_, 0);
  }

  Placement run(std::mt19937_64& rng, std::size_t iterations) {
    Placement best = placement();
    std::size_t best_size = cover_size_;
    std::size_t last_added = npos;
    for (std::size_t step = 1; step <= iterations; ++step) {
      if (uncovered_.empty()) {
        if (cover_size_ < best_size) {
          best_size = cover_size_;
          best = placement();
        }
        if (cover_size_ <= n_) break;
        const auto x = pick_removal(npos);
        drop(x);
        age_[x] = step;
        continue;
      }
      const auto out = pick_removal(last_added);
      drop(out);
      age_[out] = step;
      confirmed_[out] = false;
      for (const auto& [y, e] : adj_[out]) confirmed_[y] = true;

      const auto e = uncovered_[rng() % uncovered_.size()];
      auto [a, b] = ends_[e];
      std::size_t in = a;
      if (!confirmed_[a] || (confirmed_[b] && better(b, a))) in = b;
      add(in);
      age_[in] = step;
      last_added = in;
      for (const auto& [y, f] : adj_[in]) confirmed_[y] = true;

      for (auto f : uncovered_) {
        ++weight_[f];
        ++score_[ends_[f].first];
        ++score_[ends_[f].second];
      }
      total_weight_ += uncovered_.size();
      if (total_weight_ > ends_.size() * (n_ + 1)) forget();
    }
    return best;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  static std::size_t slot(std::size_t v, int s) { return 2 * v + static_cast<std::size_t>(s); }

  void link(std::size_t a, std::size_t b) {
    adj_[a].emplace_back(b, ends_.size());
    adj_[b].emplace_back(a, ends_.size());
    ends_.emplace_back(a, b);
  }

  bool better(std::size_t a, std::size_t b) const {
    return score_[a] > score_[b] || (score_[a] == score_[b] && age_[a] < age_[b]);
  }

  std::size_t pick_removal(std::size_t forbidden) const {
    std::size_t best = npos;
    for (std::size_t x = 0; x < 2 * n_; ++x)
      if (in_cover_[x] && x != forbidden && (best == npos || better(x, best))) best = x;
    return best;
  }

  void mark_uncovered(std::size_t e) {
    position_[e] = uncovered_.size();
    uncovered_.push_back(e);
  }

  void mark_covered(std::size_t e) {
    const auto last = uncovered_.back();
    uncovered_[position_[e]] = last;
    position_[last] = position_[e];
    uncovered_.pop_back();
    position_[e] = npos;
  }

  void add(std::size_t x) {
    in_cover_[x] = true;
    ++cover_size_;
    score_[x] = -score_[x];
    for (const auto& [y, e] : adj_[x]) {
      if (in_cover_[y]) {
        score_[y] += static_cast<std::int64_t>(weight_[e]);
      } else {
        score_[y] -= static_cast<std::int64_t>(weight_[e]);
        mark_covered(e);
      }
    }
  }

  void drop(std::size_t x) {
    in_cover_[x] = false;
    --cover_size_;
    score_[x] = -score_[x];
    for (const auto& [y, e] : adj_[x]) {
      if (in_cover_[y]) {
        score_[y] -= static_cast<std::int64_t>(weight_[e]);
      } else {
        score_[y] += static_cast<std::int64_t>(weight_[e]);
        mark_uncovered(e);
      }
    }
  }

  /// Recomputes scores and the uncovered list from the cover.
  void rescore() {
    std::fill(score_.begin(), score_.end(), 0);
    uncovered_.clear();
    std::fill(position_.begin(), position_.end(), npos);
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      const auto [a, b] = ends_[e];
      const auto w = static_cast<std::int64_t>(weight_[e]);
      if (in_cover_[a] && !in_cover_[b]) score_[a] -= w;
      if (in_cover_[b] && !in_cover_[a]) score_[b] -= w;
      if (!in_cover_[a] && !in_cover_[b]) {
        score_[a] += w;
        score_[b] += w;
        mark_uncovered(e);
      }
    }
  }

  void forget() {
    total_weight_ = 0;
    for (auto& w : weight_) {
      w = std::max<std::size_t>(1, w * 3 / 10);
      total_weight_ += w;
    }
    rescore();
  }

  Placement placement() const {
    Placement side(n_, -1);
    for (std::size_t v = 0; v < n_; ++v)
      for (int s : {0, 1})
        if (!in_cover_[slot(v, s)]) side[v] = s;
    return side;
  }

  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::size_t> weight_;
  std::size_t total_weight_ = 0;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> uncovered_;
  std::vector<bool> in_cover_;
  std::size_t cover_size_ = 0;
  std::vector<std::int64_t> score_;
  std::vector<bool> confirmed_;
  std::vector<std::size_t> age_;
};

std::vector<std::size_t> deleted_of(const Placement& side) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < side.size(); ++v)
    if (side[v] < 0) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::size_t> heuristic_oct(const Graph& graph, std::uint64_t seed, std::size_t restarts) {
  std::vector<std::size_t> best;
  bool have = false;
  const auto n = graph.size();
  const auto iterations = std::min(50 * n, 20'000'000 / (n + 1)) + 1000;
  for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + r);
    SlotCover cover(graph, local_search(graph, rng));
    auto candidate = deleted_of(cover.run(rng, iterations));
    if (!have || candidate.size() < best.size() || (candidate.size() == best.size() && candidate < best)) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

}  // namespace ordfactor::detail
