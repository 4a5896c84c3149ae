#include "gpack/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace gpack {

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency) total += row.size();
  return total;
}

bool BipartiteGraph::has_edge(int x, int u) const {
  const auto& row = adjacency.at(static_cast<std::size_t>(x));
  return std::binary_search(row.begin(), row.end(), u);
}

void BipartiteGraph::add_edge(int x, int u) {
  if (x < 0 || static_cast<std::size_t>(x) >= left || u < 0 || static_cast<std::size_t>(u) >= right)
    throw std::out_of_range("BipartiteGraph::add_edge: vertex out of range");
  auto& row = adjacency[static_cast<std::size_t>(x)];
  auto it = std::lower_bound(row.begin(), row.end(), u);
  if (it != row.end() && *it == u) throw std::invalid_argument("BipartiteGraph::add_edge: duplicate");
  row.insert(it, u);
}

bool BipartiteGraph::remove_edge(int x, int u) {
  auto& row = adjacency.at(static_cast<std::size_t>(x));
  auto it = std::lower_bound(row.begin(), row.end(), u);
  if (it == row.end() || *it != u) return false;
  row.erase(it);
  return true;
}

std::size_t BipartiteGraph::right_degree(int u) const {
  std::size_t d = 0;
  for (const auto& row : adjacency)
    if (std::binary_search(row.begin(), row.end(), u)) ++d;
  return d;
}

std::vector<int> maximum_matching(const BipartiteGraph& g) {
  const int inf = std::numeric_limits<int>::max();
  const auto L = static_cast<int>(g.left);
  std::vector<int> mate_left(g.left, -1);
  std::vector<int> mate_right(g.right, -1);
  std::vector<int> dist(g.left);

  auto bfs = [&] {
    std::queue<int> queue;
    for (int x = 0; x < L; ++x) {
      dist[x] = mate_left[x] < 0 ? 0 : inf;
      if (mate_left[x] < 0) queue.push(x);
    }
    bool reachable = false;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int u : g.adjacency[x]) {
        const int y = mate_right[u];
        if (y < 0) {
          reachable = true;
        } else if (dist[y] == inf) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        }
      }
    }
    return reachable;
  };

  // Iterative DFS along the layered graph.
  std::vector<std::size_t> cursor(g.left);
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      auto& i = cursor[x];
      bool advanced = false;
      while (i < g.adjacency[x].size()) {
        const int u = g.adjacency[x][i];
        const int y = mate_right[u];
        if (y < 0) {
          // Augment along the stack.
          for (std::size_t k = stack.size(); k-- > 0;) {
            const int a = stack[k];
            const int b = g.adjacency[a][cursor[a]];
            mate_left[a] = b;
            mate_right[b] = a;
          }
          return true;
        }
        if (dist[y] == dist[x] + 1) {
          stack.push_back(y);
          advanced = true;
          break;
        }
        ++i;
      }
      if (!advanced) {
        dist[x] = inf;
        stack.pop_back();
        if (!stack.empty()) ++cursor[stack.back()];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int x = 0; x < L; ++x)
      if (mate_left[x] < 0) dfs(x);
  }
  return mate_left;
}

}  // namespace gpack
