#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hanoi/graph_builder.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

enum class ExportFormat { dot, csv, jsonl };

inline std::optional<ExportFormat> format_from_string(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "csv") return ExportFormat::csv;
  if (name == "jsonl") return ExportFormat::jsonl;
  return std::nullopt;
}

inline std::string state_label(StateCode code, int disc_count, int peg_count) {
  return format_state(decode(code, disc_count, peg_count));
}

namespace detail {

// Comma-form labels (m > 9) must be quoted to stay one CSV field.
inline std::string csv_field(const std::string& label) {
  if (label.find(',') == std::string::npos) return label;
  return '"' + label + '"';
}

}  // namespace detail

inline void export_dot(const HanoiGraph& g, std::ostream& out) {
  out << "digraph hanoi {\n";
  for (StateCode code = 0; code < g.vertex_count; ++code)
    out << "  \"" << state_label(code, g.disc_count, g.peg_count) << "\";\n";
  for (const Arc& arc : g.arcs)
    out << "  \"" << state_label(arc.from, g.disc_count, g.peg_count) << "\" -> \""
        << state_label(arc.to, g.disc_count, g.peg_count) << "\" [label=\""
        << arc.disc << "\"];\n";
  out << "}\n";
}

inline void export_csv(const HanoiGraph& g, std::ostream& out) {
  struct Row {
    std::string from;
    std::string to;
    int disc;
  };
  std::vector<Row> rows;
  rows.reserve(g.arcs.size());
  for (const Arc& arc : g.arcs)
    rows.push_back({state_label(arc.from, g.disc_count, g.peg_count),
                    state_label(arc.to, g.disc_count, g.peg_count), arc.disc});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  out << "from,to,disc\n";
  for (const Row& row : rows)
    out << detail::csv_field(row.from) << ',' << detail::csv_field(row.to) << ','
        << row.disc << '\n';
}

inline void export_jsonl(const HanoiGraph& g, std::ostream& out) {
  for (const Arc& arc : g.arcs)
    out << "{\"from\":\"" << state_label(arc.from, g.disc_count, g.peg_count)
        << "\",\"to\":\"" << state_label(arc.to, g.disc_count, g.peg_count)
        << "\",\"disc\":" << arc.disc << "}\n";
}

// Byte-identical output for identical graphs, whichever builder made them.
inline void export_graph(const HanoiGraph& g, ExportFormat format, std::ostream& out) {
  switch (format) {
    case ExportFormat::dot: export_dot(g, out); break;
    case ExportFormat::csv: export_csv(g, out); break;
    case ExportFormat::jsonl: export_jsonl(g, out); break;
  }
  if (!out) throw std::runtime_error("graph export: sink write failure");
}

}  // namespace hanoi
