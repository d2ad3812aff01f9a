#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hanoi/arc_predicate.hpp"
#include "hanoi/graph_builder.hpp"
#include "hanoi/scc.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

// A replayable walk: applying the moves to `start` reaches `end`.
struct MoveSequence {
  StateCode start;
  StateCode end;
  std::vector<MoveWitness> moves;
};

namespace detail {

// CSR-style arc index per source code; relies on arcs sorted by (from, to).
inline std::vector<std::size_t> row_offsets(const HanoiGraph& g) {
  std::vector<std::size_t> offsets(g.vertex_count + 1, 0);
  for (const Arc& arc : g.arcs) ++offsets[arc.from + 1];
  for (std::size_t v = 1; v < offsets.size(); ++v) offsets[v] += offsets[v - 1];
  return offsets;
}

}  // namespace detail

// Breadth-first shortest move sequence, or nullopt when the target is
// unreachable. Successors are scanned in ascending code order, so ties
// between equal-length sequences break deterministically toward the
// smallest successor code.
inline std::optional<MoveSequence> shortest_path(const HanoiGraph& g,
                                                 StateCode from, StateCode to) {
  if (from >= g.vertex_count || to >= g.vertex_count)
    throw std::out_of_range("state code out of range");
  MoveSequence seq{from, to, {}};
  if (from == to) return seq;
  const std::vector<std::size_t> offsets = detail::row_offsets(g);
  constexpr std::size_t no_arc = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent_arc(g.vertex_count, no_arc);
  std::vector<char> seen(g.vertex_count, 0);
  std::queue<StateCode> frontier;
  frontier.push(from);
  seen[from] = 1;
  bool found = false;
  while (!frontier.empty() && !found) {
    const StateCode u = frontier.front();
    frontier.pop();
    for (std::size_t i = offsets[u]; i < offsets[u + 1]; ++i) {
      const StateCode v = g.arcs[i].to;
      if (seen[v]) continue;
      seen[v] = 1;
      parent_arc[v] = i;
      if (v == to) {
        found = true;
        break;
      }
      frontier.push(v);
    }
  }
  if (!found) return std::nullopt;
  for (StateCode v = to; v != from;) {
    const Arc& arc = g.arcs[parent_arc[v]];
    seq.moves.push_back({arc.disc, peg_digit(arc.from, arc.disc, g.peg_count),
                         peg_digit(arc.to, arc.disc, g.peg_count)});
    v = arc.from;
  }
  std::reverse(seq.moves.begin(), seq.moves.end());
  return seq;
}

// True iff every state reaches every state (single SCC).
inline bool is_strongly_connected(const HanoiGraph& g) {
  if (g.vertex_count <= 1) return true;
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  for (const Arc& arc : g.arcs)
    adj[arc.from].push_back(static_cast<std::size_t>(arc.to));
  return detail::strongly_connected(adj);
}

}  // namespace hanoi
