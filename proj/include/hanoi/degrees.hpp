#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hanoi/movement_digraph.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

// Outdegree by direct scan: one admissible digraph arc per legal move.
inline int outdegree_scan(const State& u, const MovementDigraph& d) {
  if (u.peg_count() != d.peg_count())
    throw std::invalid_argument("outdegree: state/digraph peg counts differ");
  const std::vector<int> top = detail::top_discs(u);
  int degree = 0;
  for (auto [p, q] : d.arcs()) {
    const int source_top = top[static_cast<std::size_t>(p)];
    if (source_top == 0) continue;
    const int target_top = top[static_cast<std::size_t>(q)];
    if (target_top == 0 || source_top < target_top) ++degree;
  }
  return degree;
}

// The same count through the indicator identity
//     sum over digraph arcs (p, q) of  x_P * (y_PQ - x_Q + 1)
// where P, Q are the disc sets on p and q, x_A = [A nonempty], and
// y_AB = [A, B nonempty and min A <= min B]. Evaluated exactly as
// written; P and Q are disjoint for p != q, so the <= never ties with
// the strict < of the scan. Both routes are asserted equal in tests.
inline int outdegree_indicator(const State& u, const MovementDigraph& d) {
  if (u.peg_count() != d.peg_count())
    throw std::invalid_argument("outdegree: state/digraph peg counts differ");
  const std::vector<int> top = detail::top_discs(u);
  int degree = 0;
  for (auto [p, q] : d.arcs()) {
    const int min_p = top[static_cast<std::size_t>(p)];
    const int min_q = top[static_cast<std::size_t>(q)];
    const int x_p = min_p != 0 ? 1 : 0;
    const int x_q = min_q != 0 ? 1 : 0;
    const int y = (x_p == 1 && x_q == 1 && min_p <= min_q) ? 1 : 0;
    degree += x_p * (y - x_q + 1);
  }
  return degree;
}

struct DegreeProfile {
  int disc_count;
  int peg_count;
  std::vector<std::uint32_t> per_state;              // indexed by state code
  std::map<std::uint32_t, std::uint64_t> histogram;  // outdegree -> state count
  std::uint64_t sum;
};

// Outdegrees of all m^n states via the indicator route.
inline DegreeProfile degree_profile(int disc_count, const MovementDigraph& d) {
  DegreeProfile profile{disc_count, d.peg_count(), {}, {}, 0};
  const StateRange range = all_states(disc_count, d.peg_count());
  profile.per_state.reserve(range.size());
  for (auto it = range.begin(); it != range.end(); ++it) {
    const auto degree = static_cast<std::uint32_t>(outdegree_indicator(*it, d));
    profile.per_state.push_back(degree);
    ++profile.histogram[degree];
    profile.sum += degree;
  }
  return profile;
}

}  // namespace hanoi
