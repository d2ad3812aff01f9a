#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hanoi/analysis.hpp"
#include "hanoi/combinatorics.hpp"
#include "hanoi/degrees.hpp"
#include "hanoi/movement_digraph.hpp"

namespace hanoi {

// Input schema: {"pegs": m, "arcs": [[p, q], ...]} with 1-based labels.
inline MovementDigraph digraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pegs") || !j.contains("arcs"))
    throw std::invalid_argument("digraph json needs \"pegs\" and \"arcs\"");
  if (!j["pegs"].is_number_integer())
    throw std::invalid_argument("digraph json: \"pegs\" must be an integer");
  if (!j["arcs"].is_array())
    throw std::invalid_argument("digraph json: \"arcs\" must be an array");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(j["arcs"].size());
  for (const auto& entry : j["arcs"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw std::invalid_argument("digraph json: each arc must be a [from, to] pair");
    arcs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return MovementDigraph(j["pegs"].get<int>(), std::move(arcs));
}

// Counts can exceed every built-in integer, so this one document is
// composed by hand with the exact decimal values left unquoted.
inline std::string report_json(const ArcCountReport& report,
                               std::string_view digraph_label) {
  std::ostringstream out;
  out << "{\"n\":" << report.disc_count << ",\"m\":" << report.peg_count
      << ",\"digraph\":" << nlohmann::json(std::string(digraph_label)).dump()
      << ",\"per_disc\":[";
  for (std::size_t i = 0; i < report.per_disc.size(); ++i) {
    if (i != 0) out << ',';
    out << report.per_disc[i].str();
  }
  out << "],\"total\":" << report.total.str() << ",\"source\":\""
      << (report.source == CountSource::closed_form ? "closed_form" : "enumerated")
      << "\"}";
  return out.str();
}

inline nlohmann::json profile_json(const DegreeProfile& profile) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [degree, count] : profile.histogram)
    histogram[std::to_string(degree)] = count;
  return {{"n", profile.disc_count},
          {"m", profile.peg_count},
          {"histogram", histogram},
          {"sum", profile.sum}};
}

inline nlohmann::json moves_json(const MoveSequence& seq) {
  nlohmann::json moves = nlohmann::json::array();
  for (const MoveWitness& move : seq.moves)
    moves.push_back({{"disc", move.disc}, {"from", move.from}, {"to", move.to}});
  return {{"length", seq.moves.size()}, {"moves", moves}};
}

}  // namespace hanoi
