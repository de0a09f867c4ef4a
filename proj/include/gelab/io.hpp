#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gelab/errors.hpp"
#include "gelab/graph.hpp"
#include "gelab/rational.hpp"

namespace gelab::io {

enum class GraphFormat { automatic, edge_list, dimacs };

inline GraphFormat parse_format(std::string_view name) {
  if (name == "auto") return GraphFormat::automatic;
  if (name == "edge-list") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::size_t parse_index(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("expected a nonnegative integer, got '" + token + "'", line);
  }
  if (token.size() > 6) throw ParseError("label '" + token + "' out of range", line);
  return std::stoul(token);
}

inline Graph build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n > kMaxVertices) throw ParseError("graph has " + std::to_string(n) + " vertices; the limit is " + std::to_string(kMaxVertices));
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) + " exceeds declared vertex count");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace detail

// "u v" per line with 0-based labels; '#' comments and blank lines ignored.
// An optional "n <count>" line fixes the vertex count, otherwise it is the
// largest label plus one.
inline Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::size_t> declared;
  std::size_t max_label_plus_one = 0;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    auto text = detail::trim(raw);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = detail::trim(text.substr(0, hash));
    if (text.empty()) continue;
    auto t = detail::tokens(text);
    if (t[0] == "n") {
      if (t.size() != 2) throw ParseError("expected 'n <count>'", line);
      if (declared) throw ParseError("duplicate vertex-count line", line);
      declared = detail::parse_index(t[1], line);
      continue;
    }
    if (t.size() != 2) throw ParseError("expected 'u v'", line);
    Vertex u = detail::parse_index(t[0], line);
    Vertex v = detail::parse_index(t[1], line);
    if (u == v) throw ParseError("self-loop on vertex " + t[0], line);
    edges.emplace_back(u, v);
    max_label_plus_one = std::max({max_label_plus_one, u + 1, v + 1});
  }
  return detail::build(declared.value_or(max_label_plus_one), edges);
}

// "p edge <n> <m>" header, "e <u> <v>" lines with 1-based labels, "c" comments.
inline Graph read_dimacs(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<std::size_t> n;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    auto text = detail::trim(raw);
    if (text.empty() || text[0] == 'c') continue;
    auto t = detail::tokens(text);
    if (t[0] == "p") {
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) throw ParseError("expected 'p edge <n> <m>'", line);
      if (n) throw ParseError("duplicate problem line", line);
      n = detail::parse_index(t[2], line);
    } else if (t[0] == "e") {
      if (!n) throw ParseError("edge before problem line", line);
      if (t.size() != 3) throw ParseError("expected 'e <u> <v>'", line);
      Vertex u = detail::parse_index(t[1], line);
      Vertex v = detail::parse_index(t[2], line);
      if (u == 0 || v == 0) throw ParseError("DIMACS labels are 1-based", line);
      if (u == v) throw ParseError("self-loop on vertex " + t[1], line);
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError("unrecognised line '" + std::string(text) + "'", line);
    }
  }
  if (!n) throw ParseError("missing 'p edge' line");
  return detail::build(*n, edges);
}

inline GraphFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    auto line = detail::trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
    return (line[0] == 'p' || line[0] == 'e') ? GraphFormat::dimacs : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

inline Graph read_graph(std::istream& in, GraphFormat format = GraphFormat::automatic) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (format == GraphFormat::automatic) format = detect_format(text);
  std::istringstream body(text);
  return format == GraphFormat::dimacs ? read_dimacs(body) : read_edge_list(body);
}

// Edge list with an explicit "n" line; `comments` become leading '#' lines.
inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

struct DistributionFile {
  Distribution distribution;
  bool renormalized = false;  // decimal entries did not sum to 1 and were rescaled
};

// "v p_v" per line; p_v is "a/b", an integer, or a decimal expanded exactly.
// Unlisted vertices get 0. All-fraction input must sum to exactly 1; input
// containing decimals is rescaled to sum 1.
inline DistributionFile read_distribution(std::istream& in, std::size_t n) {
  std::vector<Rational> w(n, Rational(0));
  std::vector<bool> seen(n, false);
  bool any_decimal = false;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    auto text = detail::trim(raw);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = detail::trim(text.substr(0, hash));
    if (text.empty()) continue;
    auto t = detail::tokens(text);
    if (t.size() != 2) throw ParseError("expected 'v p_v'", line);
    Vertex v = detail::parse_index(t[0], line);
    if (v >= n) throw ParseError("vertex " + t[0] + " not in graph of order " + std::to_string(n), line);
    if (seen[v]) throw ParseError("vertex " + t[0] + " listed twice", line);
    seen[v] = true;
    try {
      w[v] = parse_rational(t[1]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
    if (w[v] < 0) throw ParseError("negative probability", line);
    if (t[1].find_first_of(".eE") != std::string::npos) any_decimal = true;
  }
  Rational total = 0;
  for (const auto& x : w) total += x;
  DistributionFile out;
  if (total != 1) {
    if (!any_decimal || total == 0) throw ParseError("probabilities sum to " + to_string(total) + ", expected 1");
    for (auto& x : w) x /= total;
    out.renormalized = true;
  }
  out.distribution = Distribution(std::move(w));
  return out;
}

}  // namespace gelab::io
