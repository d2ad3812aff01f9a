#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "hanoi/movement_digraph.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

// One legal move: the unique disc that changes peg, with its endpoints.
struct MoveWitness {
  int disc;
  int from;
  int to;
  bool operator==(const MoveWitness&) const = default;
};

// Decides whether v follows from u by a single legal move, checking in
// order: exactly one disc differs; the digraph allows the peg pair; the
// moved disc is topmost on its source peg and lands on no smaller disc.
// The cheap scans run first so mismatching pairs exit early.
inline std::optional<MoveWitness> is_arc(const State& u, const State& v,
                                         const MovementDigraph& d) {
  if (u.disc_count() != v.disc_count() || u.peg_count() != v.peg_count() ||
      u.peg_count() != d.peg_count())
    throw std::invalid_argument("is_arc: mismatched state/digraph dimensions");
  const int n = u.disc_count();
  int k = 0;
  for (int disc = 1; disc <= n; ++disc) {
    if (u.peg_of(disc) != v.peg_of(disc)) {
      if (k != 0) return std::nullopt;  // more than one disc changed peg
      k = disc;
    }
  }
  if (k == 0) return std::nullopt;
  if (!d.allows(u.peg_of(k), v.peg_of(k))) return std::nullopt;
  for (int disc = 1; disc < k; ++disc) {
    if (u.peg_of(disc) == u.peg_of(k)) return std::nullopt;  // k is buried
    if (v.peg_of(disc) == v.peg_of(k)) return std::nullopt;  // k would land on a smaller disc
  }
  return MoveWitness{k, u.peg_of(k), v.peg_of(k)};
}

// Family-specific replacements for the digraph membership test, for
// callers that know the variant and want to skip the adjacency table.

inline bool shortcut_linear(int from, int to) { return std::abs(from - to) == 1; }

// Cyclic successor test with the wrap-around arc m -> 1 handled
// modularly, matching the directed cycle's arc set exactly.
inline bool shortcut_cyclic(int from, int to, int m) {
  return to - from == 1 || (from == m && to == 1);
}

inline bool shortcut_star(int from, int to) { return (from == 1) != (to == 1); }

}  // namespace hanoi
