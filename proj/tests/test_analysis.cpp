#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "hanoi/analysis.hpp"
#include "hanoi/arc_predicate.hpp"
#include "hanoi/graph_builder.hpp"
#include "hanoi/movement_digraph.hpp"
#include "hanoi/state.hpp"

using hanoi::Family;
using hanoi::HanoiGraph;
using hanoi::MovementDigraph;
using hanoi::StateCode;

namespace {

// Plain BFS distance table, written independently of the library's
// path search so the two can vouch for each other.
std::vector<std::uint64_t> bfs_distances(const HanoiGraph& g, StateCode from) {
  const std::uint64_t unreached = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::vector<StateCode>> adj(g.vertex_count);
  for (const hanoi::Arc& arc : g.arcs) adj[arc.from].push_back(arc.to);
  std::vector<std::uint64_t> dist(g.vertex_count, unreached);
  std::queue<StateCode> frontier;
  dist[from] = 0;
  frontier.push(from);
  while (!frontier.empty()) {
    const StateCode u = frontier.front();
    frontier.pop();
    for (const StateCode v : adj[u])
      if (dist[v] == unreached) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
  }
  return dist;
}

// Applies a move sequence step by step, requiring every step to be a
// genuine arc, and returns the code it lands on.
StateCode replay(const hanoi::MoveSequence& seq, const HanoiGraph& g) {
  hanoi::State current = hanoi::decode(seq.start, g.disc_count, g.peg_count);
  for (const hanoi::MoveWitness& move : seq.moves) {
    const hanoi::State next = current.with_disc_on(move.disc, move.to);
    const auto witness = hanoi::is_arc(current, next, g.digraph);
    REQUIRE(witness.has_value());
    REQUIRE(*witness == move);
    current = next;
  }
  return hanoi::encode(current);
}

}  // namespace

TEST_CASE("trivial transfer: start equals goal") {
  const HanoiGraph g =
      hanoi::build_by_neighbors(2, hanoi::make_family(Family::complete, 3));
  const auto seq = hanoi::shortest_path(g, 5, 5);
  REQUIRE(seq.has_value());
  CHECK(seq->moves.empty());
  CHECK(seq->start == 5);
  CHECK(seq->end == 5);
}

TEST_CASE("a lone disc rides the directed cycle the long way round") {
  const HanoiGraph g =
      hanoi::build_by_neighbors(1, hanoi::make_family(Family::cycle, 3));
  const auto seq = hanoi::shortest_path(g, 0, 2);  // peg 1 to peg 3
  REQUIRE(seq.has_value());
  REQUIRE(seq->moves.size() == 2);
  CHECK(seq->moves[0] == hanoi::MoveWitness{1, 1, 2});
  CHECK(seq->moves[1] == hanoi::MoveWitness{1, 2, 3});
}

TEST_CASE("two discs on K3: tower transfer takes three moves") {
  const HanoiGraph g =
      hanoi::build_by_neighbors(2, hanoi::make_family(Family::complete, 3));
  const StateCode goal = hanoi::encode(hanoi::parse_state("33", 2, 3));
  const auto seq = hanoi::shortest_path(g, 0, goal);
  REQUIRE(seq.has_value());
  CHECK(seq->moves.size() == 3);
  CHECK(replay(*seq, g) == goal);
}

TEST_CASE("classical tower transfer needs 2^n - 1 moves") {
  for (int n = 1; n <= 6; ++n) {
    const HanoiGraph g =
        hanoi::build_by_neighbors(n, hanoi::make_family(Family::complete, 3));
    const auto seq = hanoi::shortest_path(g, 0, g.vertex_count - 1);
    REQUIRE(seq.has_value());
    CAPTURE(n);
    CHECK(seq->moves.size() == (1ull << n) - 1);
    CHECK(replay(*seq, g) == g.vertex_count - 1);
  }
}

TEST_CASE("path lengths equal an independent BFS distance table") {
  const HanoiGraph g =
      hanoi::build_by_neighbors(2, hanoi::make_family(Family::star, 4));
  const std::vector<std::uint64_t> dist = bfs_distances(g, 0);
  for (StateCode to = 0; to < g.vertex_count; ++to) {
    const auto seq = hanoi::shortest_path(g, 0, to);
    REQUIRE(seq.has_value());
    CHECK(seq->moves.size() == dist[to]);
    CHECK(replay(*seq, g) == to);
  }
}

TEST_CASE("search is deterministic and builder-independent") {
  const MovementDigraph d = hanoi::make_family(Family::complete, 4);
  const HanoiGraph fast = hanoi::build_by_neighbors(2, d);
  const HanoiGraph naive = hanoi::build_naive(2, d);
  const StateCode goal = hanoi::encode(hanoi::parse_state("44", 2, 4));
  const auto a = hanoi::shortest_path(fast, 0, goal);
  const auto b = hanoi::shortest_path(naive, 0, goal);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->moves == b->moves);
  const auto again = hanoi::shortest_path(fast, 0, goal);
  REQUIRE(again.has_value());
  CHECK(a->moves == again->moves);
}

TEST_CASE("unreachable goals come back empty") {
  // Pegs 2 and 3 are sinks: nothing ever moves back to peg 1.
  const MovementDigraph one_way(3, {{1, 2}, {1, 3}});
  const HanoiGraph g = hanoi::build_by_neighbors(1, one_way);
  CHECK_FALSE(hanoi::shortest_path(g, 2, 0).has_value());
  CHECK(hanoi::shortest_path(g, 0, 1).has_value());
}

TEST_CASE("out-of-range codes are rejected") {
  const HanoiGraph g =
      hanoi::build_by_neighbors(1, hanoi::make_family(Family::cycle, 3));
  CHECK_THROWS_AS(hanoi::shortest_path(g, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(hanoi::shortest_path(g, 3, 0), std::out_of_range);
}

TEST_CASE("state graph connectivity: documented cases") {
  // No discs: the single empty state is trivially strongly connected,
  // whatever the digraph looks like.
  CHECK(hanoi::is_strongly_connected(
      hanoi::build_by_neighbors(0, MovementDigraph(3, {{1, 2}}))));

  for (const Family family :
       {Family::complete, Family::path, Family::cycle, Family::star})
    CHECK(hanoi::is_strongly_connected(
        hanoi::build_by_neighbors(2, hanoi::make_family(family, 4))));

  CHECK_FALSE(hanoi::is_strongly_connected(
      hanoi::build_by_neighbors(2, MovementDigraph(3, {{1, 2}, {1, 3}}))));
}

TEST_CASE("state graph is strongly connected exactly when the digraph is") {
  std::mt19937_64 rng(424242);
  for (int m = 3; m <= 4; ++m) {
    std::vector<MovementDigraph> digraphs;
    for (const Family family :
         {Family::complete, Family::path, Family::cycle, Family::star})
      digraphs.push_back(hanoi::make_family(family, m));
    for (int i = 0; i < 20; ++i) digraphs.push_back(hanoi::make_random(m, rng));
    for (const MovementDigraph& d : digraphs)
      for (int n = 1; n <= 2; ++n) {
        CAPTURE(n, m);
        CHECK(hanoi::is_strongly_connected(hanoi::build_by_neighbors(n, d)) ==
              d.is_strongly_connected());
      }
  }
}
