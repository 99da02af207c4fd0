#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bek/graph.hpp"

namespace bek {

enum class GraphFormat { EdgeList, Json, Graph6, Auto };

// ---------------------------------------------------------------------------
// Edge-list text: first line "n", then one "u v" line per edge.

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw std::invalid_argument("edge list: malformed header");
  Graph g(n);
  int u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
    g.add_edge(u, v);
  }
  if (!in.eof()) {
    std::string trailing;
    in.clear();
    in >> trailing;
    if (!trailing.empty()) throw std::invalid_argument("edge list: trailing junk");
  }
  return g;
}

inline std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON: {"n": int, "edges": [[u,v], ...]}.

inline Graph parse_graph_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw std::invalid_argument("json graph: need object with \"n\" and \"edges\"");
  Graph g(doc.at("n").get<int>());
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("json graph: each edge must be a pair");
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

inline std::string render_graph_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

// ---------------------------------------------------------------------------
// graph6: single size byte (n < 63) then the upper triangle as a 6-bit
// bitstream, column by column, every byte offset by 63.

inline Graph parse_graph6(std::string line) {
  constexpr const char* kHeader = ">>graph6<<";
  if (line.rfind(kHeader, 0) == 0) line.erase(0, std::string(kHeader).size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) throw std::invalid_argument("graph6: empty input");
  const int n = static_cast<int>(static_cast<unsigned char>(line[0])) - 63;
  if (n < 0 || n >= 63)
    throw std::invalid_argument("graph6: unsupported size byte (need n < 63)");
  if (n > Graph::kMaxVertices) throw std::invalid_argument("graph6: graph too large");
  const int bits = n * (n - 1) / 2;
  const int bytes = (bits + 5) / 6;
  if (static_cast<int>(line.size()) != 1 + bytes)
    throw std::invalid_argument("graph6: length mismatch");
  Graph g(n);
  int bit = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i, ++bit) {
      const unsigned char c = static_cast<unsigned char>(line[1 + bit / 6]);
      if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
      if (((c - 63) >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

inline std::string render_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n >= 63) throw std::invalid_argument("graph6: only n < 63 supported");
  const int bits = n * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  int bit = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
  return out;
}

// ---------------------------------------------------------------------------

inline GraphFormat detect_format(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return GraphFormat::Json;
    if (std::isdigit(static_cast<unsigned char>(c))) return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
  }
  throw std::invalid_argument("cannot detect graph format of empty input");
}

inline Graph parse_graph(const std::string& text, GraphFormat fmt = GraphFormat::Auto) {
  if (fmt == GraphFormat::Auto) fmt = detect_format(text);
  switch (fmt) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Json: return parse_graph_json(text);
    case GraphFormat::Graph6: return parse_graph6(text);
    default: throw std::logic_error("parse_graph: unreachable");
  }
}

}  // namespace bek
