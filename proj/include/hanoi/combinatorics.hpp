#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hanoi/graph_builder.hpp"
#include "hanoi/movement_digraph.hpp"

namespace hanoi {

// Exact integers throughout: the closed forms stay meaningful far past
// what can be enumerated, so nothing here may round or wrap.
using bigint = boost::multiprecision::cpp_int;

namespace detail {
inline bigint ipow(int base, int exp) {
  return boost::multiprecision::pow(bigint(base), static_cast<unsigned>(exp));
}
inline void check_counting_args(int n, int m) {
  if (n < 0) throw std::invalid_argument("disc count must be >= 0");
  if (m < 3) throw std::invalid_argument("peg count must be >= 3");
}
}  // namespace detail

// Arcs of the state graph that move disc k. Discs above k sit anywhere
// (m choices each), discs below k must avoid both endpoint pegs (m-2
// choices each), and the endpoint pair ranges over the digraph arcs:
//   |A(D)| * m^(n-k) * (m-2)^(k-1).
inline bigint arcs_for_disc(int k, int n, int m, const bigint& digraph_arc_count) {
  detail::check_counting_args(n, m);
  if (k < 1 || k > n) throw std::out_of_range("disc index outside 1..n");
  return digraph_arc_count * detail::ipow(m, n - k) * detail::ipow(m - 2, k - 1);
}

// Family specializations, written out with each family's arc count
// folded in. Must agree with the generic form; the tests hold them to
// that.
inline bigint arcs_for_disc(int k, int n, int m, Family family) {
  detail::check_counting_args(n, m);
  if (k < 1 || k > n) throw std::out_of_range("disc index outside 1..n");
  switch (family) {
    case Family::complete:
      return bigint(m - 1) * detail::ipow(m, n - k + 1) * detail::ipow(m - 2, k - 1);
    case Family::cycle:
      return detail::ipow(m, n - k + 1) * detail::ipow(m - 2, k - 1);
    case Family::path:
    case Family::star:
      return bigint(2) * (m - 1) * detail::ipow(m, n - k) * detail::ipow(m - 2, k - 1);
  }
  throw std::logic_error("unknown family");
}

// Verifies both per-disc recurrences exactly:
//   m * count(k+1) == (m-2) * count(k)   (cleared-denominator form)
//   count(k) at n+1 discs == m * count(k) at n discs
inline bool check_recurrences(int n, int m, const bigint& digraph_arc_count) {
  if (n < 1) throw std::invalid_argument("recurrence check needs n >= 1");
  detail::check_counting_args(n, m);
  for (int k = 1; k < n; ++k) {
    if (bigint(m) * arcs_for_disc(k + 1, n, m, digraph_arc_count) !=
        bigint(m - 2) * arcs_for_disc(k, n, m, digraph_arc_count))
      return false;
  }
  for (int k = 1; k <= n; ++k) {
    if (arcs_for_disc(k, n + 1, m, digraph_arc_count) !=
        bigint(m) * arcs_for_disc(k, n, m, digraph_arc_count))
      return false;
  }
  return true;
}

// Total arcs of the state graph: |A(D)| * (m^n - (m-2)^n) / 2. The two
// powers have the same parity, so their difference is even and the
// division is exact.
inline bigint total_arcs(int n, int m, const bigint& digraph_arc_count) {
  detail::check_counting_args(n, m);
  return digraph_arc_count * ((detail::ipow(m, n) - detail::ipow(m - 2, n)) / 2);
}

inline bigint total_arcs(int n, int m, Family family) {
  detail::check_counting_args(n, m);
  const bigint diff = detail::ipow(m, n) - detail::ipow(m - 2, n);
  switch (family) {
    case Family::complete:
      return bigint(m) * (m - 1) / 2 * diff;
    case Family::cycle:
      return bigint(m) * (diff / 2);
    case Family::path:
    case Family::star:
      return bigint(m - 1) * diff;
  }
  throw std::logic_error("unknown family");
}

enum class CountSource { closed_form, enumerated };

// Per-disc arc counts plus the total, from either route.
struct ArcCountReport {
  int disc_count;
  int peg_count;
  std::vector<bigint> per_disc;  // index k-1 holds the disc-k count
  bigint total;
  CountSource source;
};

inline ArcCountReport closed_form_report(int n, int m, const bigint& digraph_arc_count) {
  ArcCountReport report{n, m, {}, total_arcs(n, m, digraph_arc_count),
                        CountSource::closed_form};
  report.per_disc.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    report.per_disc.push_back(arcs_for_disc(k, n, m, digraph_arc_count));
  return report;
}

// Independent route: group the materialized arcs by moved disc.
inline ArcCountReport enumerated_report(const HanoiGraph& g) {
  ArcCountReport report{g.disc_count, g.peg_count,
                        std::vector<bigint>(static_cast<std::size_t>(g.disc_count)),
                        0, CountSource::enumerated};
  for (const Arc& arc : g.arcs) report.per_disc[static_cast<std::size_t>(arc.disc) - 1] += 1;
  report.total = g.arcs.size();
  return report;
}

}  // namespace hanoi
