#pragma once

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bek/betti_table.hpp"

namespace bek {

/// Macaulay2-style Betti diagram: column i, row j-i, zeros printed as ".".
inline std::string render_betti_diagram(const BettiTable& t) {
  if (t.empty()) return "(empty table)\n";
  const int pd = t.pd();
  const int reg = t.reg();
  int min_row = reg;
  for (const auto& [k, c] : t.entries())
    min_row = std::min(min_row, k.second - k.first);
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;  // [row][col]
  std::vector<long long> totals(pd + 1, 0);
  for (const auto& [k, c] : t.entries()) totals[k.first] += c;
  for (int r = min_row; r <= reg; ++r) {
    std::vector<std::string> row;
    for (int i = 0; i <= pd; ++i) {
      const long long c = t.at(i, i + r);
      row.push_back(c == 0 ? "." : std::to_string(c));
    }
    labels.push_back(std::to_string(r) + ":");
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(pd + 1);
  for (int i = 0; i <= pd; ++i) {
    width[i] = std::max(std::to_string(i).size(), std::to_string(totals[i]).size());
    for (const auto& row : cells) width[i] = std::max(width[i], row[i].size());
  }
  std::size_t label_w = std::string("total:").size();
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::ostringstream out;
  auto emit = [&](const std::string& label, const std::vector<std::string>& row) {
    out << std::setw(static_cast<int>(label_w)) << label;
    for (int i = 0; i <= pd; ++i)
      out << " " << std::setw(static_cast<int>(width[i])) << row[i];
    out << "\n";
  };
  std::vector<std::string> header, total_row;
  for (int i = 0; i <= pd; ++i) {
    header.push_back(std::to_string(i));
    total_row.push_back(std::to_string(totals[i]));
  }
  emit("", header);
  emit("total:", total_row);
  for (std::size_t r = 0; r < cells.size(); ++r) emit(labels[r], cells[r]);
  return out.str();
}

/// JSON form: {"entries": [[i, j, count], ...], "pd": p, "reg": r}.
inline std::string render_betti_json(const BettiTable& t) {
  nlohmann::json doc;
  doc["entries"] = nlohmann::json::array();
  for (const auto& [k, c] : t.entries())
    doc["entries"].push_back({k.first, k.second, c});
  doc["pd"] = t.pd();
  doc["reg"] = t.reg();
  return doc.dump();
}

inline BettiTable parse_betti_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  BettiTable t;
  for (const auto& e : doc.at("entries"))
    t.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
  return t;
}

}  // namespace bek
