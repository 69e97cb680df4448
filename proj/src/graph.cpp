#include "ordfactor/graph.hpp"

#include <algorithm>
#include <deque>

#include "ordfactor/error.hpp"

namespace ordfactor {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count, Bitset(vertex_count)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw Error(Errc::index_out_of_range, "edge endpoint out of range");
  if (u == v) throw Error(Errc::invalid_argument, "self-loop");
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.count();
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (auto v = adjacency_[u].find_next(u); v != Bitset::npos; v = adjacency_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

namespace {

std::vector<std::size_t> close_cycle(std::size_t u, std::size_t w, const std::vector<std::size_t>& parent,
                                     const std::vector<std::size_t>& depth) {
  std::vector<std::size_t> from_u{u};
  std::vector<std::size_t> from_w{w};
  auto a = u;
  auto b = w;
  while (depth[a] > depth[b]) from_u.push_back(a = parent[a]);
  while (depth[b] > depth[a]) from_w.push_back(b = parent[b]);
  while (a != b) {
    from_u.push_back(a = parent[a]);
    from_w.push_back(b = parent[b]);
  }
  from_w.pop_back();
  from_u.insert(from_u.end(), from_w.rbegin(), from_w.rend());
  return from_u;
}

}  // namespace

BipartitionWitness bipartition(const Graph& graph) {
  const auto n = graph.size();
  std::vector<int> color(n, 0);
  std::vector<std::size_t> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    color[root] = 1;
    parent[root] = root;
    queue.push_back(root);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      const auto& adj = graph.neighbors(u);
      for (auto w = adj.find_first(); w != Bitset::npos; w = adj.find_next(w)) {
        if (color[w] == 0) {
          color[w] = 3 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return BipartitionWitness(OddCycle{close_cycle(u, w, parent, depth)});
        }
      }
    }
  }
  return BipartitionWitness(Coloring{std::move(color)});
}

bool verify_witness(const Graph& graph, const BipartitionWitness& witness) {
  if (witness.bipartite()) {
    const auto& colors = witness.coloring();
    if (colors.size() != graph.size()) return false;
    for (auto c : colors)
      if (c != 1 && c != 2) return false;
    for (const auto& [u, v] : graph.edges())
      if (colors[u] == colors[v]) return false;
    return true;
  }
  const auto& cycle = witness.odd_cycle();
  if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
  auto sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= graph.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!graph.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> components(const Graph& graph) {
  const auto n = graph.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> members{root};
    seen[root] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& adj = graph.neighbors(members[i]);
      for (auto w = adj.find_first(); w != Bitset::npos; w = adj.find_next(w))
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace ordfactor
