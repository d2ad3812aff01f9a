#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace hanoi::detail {

// Number of strongly connected components, iterative Tarjan. Kept
// iterative so deep chains in large state graphs cannot exhaust the
// call stack.
inline std::size_t scc_count(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, none);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // (vertex, next edge)
  std::size_t next_order = 0;
  std::size_t count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != none) continue;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      const std::size_t v = frames.back().first;
      if (frames.back().second == 0) {
        order[v] = low[v] = next_order++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (frames.back().second < adj[v].size()) {
        const std::size_t w = adj[v][frames.back().second++];
        if (order[w] == none) {
          frames.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w] && order[w] < low[v]) low[v] = order[w];
      }
      if (descended) continue;
      const std::size_t low_v = low[v];
      if (low_v == order[v]) {
        ++count;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
        } while (w != v);
      }
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        if (low_v < low[parent]) low[parent] = low_v;
      }
    }
  }
  return count;
}

inline bool strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
  return adj.size() <= 1 || scc_count(adj) == 1;
}

}  // namespace hanoi::detail
