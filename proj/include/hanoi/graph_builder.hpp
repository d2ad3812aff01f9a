#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hanoi/arc_predicate.hpp"
#include "hanoi/movement_digraph.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

struct Arc {
  StateCode from;
  StateCode to;
  int disc;  // the disc this move transfers
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Materialized state graph. Vertices are implicit: every code in
// [0, m^n) is a valid state, so only the arc list is stored. Arcs are
// sorted by (from, to) regardless of which builder produced them.
struct HanoiGraph {
  int disc_count;
  int peg_count;
  MovementDigraph digraph;
  std::uint64_t vertex_count;  // m^n
  std::vector<Arc> arcs;
};

// Successor states of u, one per admissible digraph arc (p, q): the
// topmost disc of p moves to q when q is empty or its topmost disc is
// larger. The per-peg topmost table makes each arc test O(1).
inline std::vector<std::pair<State, MoveWitness>> neighbors(
    const State& u, const MovementDigraph& d) {
  if (u.peg_count() != d.peg_count())
    throw std::invalid_argument("neighbors: state/digraph peg counts differ");
  const std::vector<int> top = detail::top_discs(u);
  std::vector<std::pair<State, MoveWitness>> out;
  for (auto [p, q] : d.arcs()) {
    const int disc = top[static_cast<std::size_t>(p)];
    if (disc == 0) continue;
    const int blocking = top[static_cast<std::size_t>(q)];
    if (blocking != 0 && blocking < disc) continue;
    out.emplace_back(u.with_disc_on(disc, q), MoveWitness{disc, p, q});
  }
  return out;
}

// Pairwise generator: tests every ordered pair of distinct states with
// is_arc. Quadratic in the state count; kept as the reference builder
// the fast generator is checked against.
inline HanoiGraph build_naive(int disc_count, const MovementDigraph& d) {
  HanoiGraph g{disc_count, d.peg_count(), d,
               state_space_size(disc_count, d.peg_count()), {}};
  const StateRange range = all_states(disc_count, d.peg_count());
  for (auto u = range.begin(); u != range.end(); ++u) {
    for (auto v = range.begin(); v != range.end(); ++v) {
      if (u.code() == v.code()) continue;
      if (const auto witness = is_arc(*u, *v, d))
        g.arcs.push_back({u.code(), v.code(), witness->disc});
    }
  }
  return g;
}

// Per-state generator: emits the neighbors of every state, touching
// m^n * |A(D)| candidate moves instead of m^2n state pairs. Must and
// does produce the same arc set as build_naive.
inline HanoiGraph build_by_neighbors(int disc_count, const MovementDigraph& d) {
  const int m = d.peg_count();
  HanoiGraph g{disc_count, m, d, state_space_size(disc_count, m), {}};
  // weight[d-1] = m^(d-1), the code contribution of one peg step of disc d
  std::vector<StateCode> weight(static_cast<std::size_t>(disc_count));
  StateCode w = 1;
  for (int disc = 1; disc <= disc_count; ++disc) {
    weight[static_cast<std::size_t>(disc) - 1] = w;
    w *= static_cast<StateCode>(m);
  }
  std::vector<Arc> batch;
  const StateRange range = all_states(disc_count, m);
  for (auto it = range.begin(); it != range.end(); ++it) {
    batch.clear();
    for (const auto& [succ, move] : neighbors(*it, d)) {
      // only digit `move.disc` differs, so the successor code is one
      // weight adjustment away from the current code
      const StateCode step = weight[static_cast<std::size_t>(move.disc) - 1];
      const StateCode to = it.code() - static_cast<StateCode>(move.from - 1) * step +
                           static_cast<StateCode>(move.to - 1) * step;
      batch.push_back({it.code(), to, move.disc});
    }
    std::sort(batch.begin(), batch.end());
    g.arcs.insert(g.arcs.end(), batch.begin(), batch.end());
  }
  return g;
}

}  // namespace hanoi
