#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "hanoi/scc.hpp"

namespace hanoi {

// The four named move-restriction families.
enum class Family { complete, path, cycle, star };

inline std::optional<Family> family_from_string(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  return std::nullopt;
}

inline std::string_view to_string(Family family) {
  switch (family) {
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
  }
  return "?";
}

// Digraph on pegs 1..m. An arc (p, q) means a disc may move from peg p
// to peg q. Self-loops are rejected, duplicate arcs collapse to one,
// and the arc list is kept sorted so iteration order is canonical.
// Immutable after construction.
class MovementDigraph {
 public:
  MovementDigraph(int peg_count, std::vector<std::pair<int, int>> arcs)
      : peg_count_(peg_count), arcs_(std::move(arcs)) {
    if (peg_count_ < 3)
      throw std::invalid_argument("movement digraph needs at least 3 pegs");
    for (auto [p, q] : arcs_) {
      if (p < 1 || p > peg_count_ || q < 1 || q > peg_count_)
        throw std::invalid_argument("arc endpoint outside 1..m");
      if (p == q) throw std::invalid_argument("self-loop arc not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    allow_.assign(static_cast<std::size_t>(peg_count_) * peg_count_, 0);
    for (auto [p, q] : arcs_) allow_[index(p, q)] = 1;
  }

  int peg_count() const { return peg_count_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  // O(1) membership test, used inside the generator loops.
  bool allows(int from, int to) const { return allow_[index(from, to)] != 0; }

  // True iff every peg reaches every peg; decides whether every
  // transfer task on the state graph is solvable.
  bool is_strongly_connected() const {
    std::vector<std::vector<std::size_t>> adj(peg_count_);
    for (auto [p, q] : arcs_)
      adj[static_cast<std::size_t>(p) - 1].push_back(static_cast<std::size_t>(q) - 1);
    return detail::strongly_connected(adj);
  }

  bool operator==(const MovementDigraph& other) const {
    return peg_count_ == other.peg_count_ && arcs_ == other.arcs_;
  }

 private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p - 1) * peg_count_ + (q - 1);
  }

  int peg_count_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<char> allow_;
};

inline MovementDigraph make_family(Family family, int m) {
  if (m < 3) throw std::invalid_argument("family digraphs need at least 3 pegs");
  std::vector<std::pair<int, int>> arcs;
  switch (family) {
    case Family::complete:
      for (int p = 1; p <= m; ++p)
        for (int q = 1; q <= m; ++q)
          if (p != q) arcs.emplace_back(p, q);
      break;
    case Family::path:
      for (int p = 1; p < m; ++p) {
        arcs.emplace_back(p, p + 1);
        arcs.emplace_back(p + 1, p);
      }
      break;
    case Family::cycle:
      for (int p = 1; p < m; ++p) arcs.emplace_back(p, p + 1);
      arcs.emplace_back(m, 1);
      break;
    case Family::star:
      for (int p = 2; p <= m; ++p) {
        arcs.emplace_back(1, p);
        arcs.emplace_back(p, 1);
      }
      break;
  }
  return MovementDigraph(m, std::move(arcs));
}

// Each ordered peg pair is included with probability 1/2. mt19937_64 is
// fully specified by the standard, so a fixed seed reproduces the same
// digraph on every platform.
inline MovementDigraph make_random(int m, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> arcs;
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q)
      if (p != q && (rng() & 1u)) arcs.emplace_back(p, q);
  return MovementDigraph(m, std::move(arcs));
}

}  // namespace hanoi
