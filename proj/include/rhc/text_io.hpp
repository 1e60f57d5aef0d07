#pragma once

// Line-oriented text formats:
//
//   rooted-hg M r      then one edge per line: "u v w h", h in {u,v,w}
//   graph N            then one edge per line: "u v" (parallel edges repeat)
//   family n           then one member per line: decimal mask or 0b-prefixed binary
//   vset M             then one vertex id per line
//
// Blank lines and '#' comments are ignored on input. Writers emit the
// canonical order, so parse-then-write is byte-identical to the writer's output.

#include "rhc/graph.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/set_family.hpp"
#include "rhc/vertex_set.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rhc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct TokenLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<TokenLine> tokenize(std::istream& in) {
  std::vector<TokenLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    TokenLine tl{number, {}};
    for (std::string w; words >> w;) tl.tokens.push_back(w);
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
  }
  return out;
}

inline std::uint64_t parse_uint(const std::string& token, std::size_t line) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  int base = 10;
  if (token.size() > 2 && token[0] == '0' && (token[1] == 'b' || token[1] == 'B')) {
    first += 2;
    base = 2;
  }
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc() || ptr != last) throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  return value;
}

inline const TokenLine& header(const std::vector<TokenLine>& lines, std::string_view keyword, std::size_t arity) {
  if (lines.empty()) throw ParseError(0, "empty input, expected '" + std::string(keyword) + "' header");
  const auto& h = lines.front();
  if (h.tokens.front() != keyword || h.tokens.size() != arity + 1)
    throw ParseError(h.number, "expected header '" + std::string(keyword) + "' with " + std::to_string(arity) +
                                   " argument(s)");
  return h;
}

}  // namespace detail

inline RootedHypergraph read_hypergraph(std::istream& in) {
  auto lines = detail::tokenize(in);
  const auto& h = detail::header(lines, "rooted-hg", 2);
  auto vertex_count = detail::parse_uint(h.tokens[1], h.number);
  auto r = detail::parse_uint(h.tokens[2], h.number);
  if (r == 0) throw ParseError(h.number, "rootedness parameter must be positive");
  std::vector<HyperEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 4) throw ParseError(l.number, "expected 'u v w h'");
    Vertex x[4];
    for (int k = 0; k < 4; ++k) {
      auto value = detail::parse_uint(l.tokens[k], l.number);
      if (value >= vertex_count) throw ParseError(l.number, "vertex " + l.tokens[k] + " out of range");
      x[k] = static_cast<Vertex>(value);
    }
    if (x[0] == x[1] || x[1] == x[2] || x[0] == x[2]) throw ParseError(l.number, "repeated vertex in a triple");
    if (x[3] != x[0] && x[3] != x[1] && x[3] != x[2]) throw ParseError(l.number, "head not in triple");
    edges.push_back(HyperEdge{{x[0], x[1], x[2]}, x[3]});
  }
  return RootedHypergraph(vertex_count, std::move(edges), static_cast<unsigned>(r));
}

inline void write_hypergraph(std::ostream& out, const RootedHypergraph& h) {
  out << "rooted-hg " << h.vertex_count() << ' ' << h.r() << '\n';
  for (const auto& e : h.edges())
    out << e.vertices[0] << ' ' << e.vertices[1] << ' ' << e.vertices[2] << ' ' << e.head << '\n';
}

inline Graph read_graph(std::istream& in) {
  auto lines = detail::tokenize(in);
  const auto& h = detail::header(lines, "graph", 1);
  auto vertex_count = detail::parse_uint(h.tokens[1], h.number);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'u v'");
    auto a = detail::parse_uint(l.tokens[0], l.number);
    auto b = detail::parse_uint(l.tokens[1], l.number);
    if (a >= vertex_count || b >= vertex_count) throw ParseError(l.number, "vertex out of range");
    if (a == b) throw ParseError(l.number, "self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph(vertex_count, std::move(edges));
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << '\n';
  for (const auto& [a, b] : g.edge_pairs()) out << a << ' ' << b << '\n';
}

inline SetFamily read_family(std::istream& in) {
  auto lines = detail::tokenize(in);
  const auto& h = detail::header(lines, "family", 1);
  auto n = detail::parse_uint(h.tokens[1], h.number);
  if (n > max_ground_size) throw ParseError(h.number, "ground set size above " + std::to_string(max_ground_size));
  std::vector<Mask> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 1) throw ParseError(l.number, "expected one mask per line");
    auto m = detail::parse_uint(l.tokens[0], l.number);
    if (m >= (std::uint64_t{1} << n)) throw ParseError(l.number, "mask " + l.tokens[0] + " outside P(n)");
    members.push_back(static_cast<Mask>(m));
  }
  return SetFamily(static_cast<unsigned>(n), std::move(members));
}

inline void write_family(std::ostream& out, const SetFamily& f) {
  out << "family " << f.n() << '\n';
  for (Mask m : f) out << m << '\n';
}

/// Reads either a "vset M" file or a "family n" file; in the latter case the
/// masks are the vertex ids and M must equal 2^n.
inline VertexSet read_vertex_set(std::istream& in, std::size_t universe) {
  auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty vertex set file");
  const auto& h = lines.front();
  if (h.tokens.size() != 2 || (h.tokens[0] != "vset" && h.tokens[0] != "family"))
    throw ParseError(h.number, "expected header 'vset M' or 'family n'");
  auto declared = detail::parse_uint(h.tokens[1], h.number);
  if (h.tokens[0] == "family") {
    if (declared >= 64 || (std::uint64_t{1} << declared) != universe)
      throw ParseError(h.number, "family ground set does not match the hypergraph's vertex count");
  } else if (declared != universe) {
    throw ParseError(h.number, "vset universe does not match the hypergraph's vertex count");
  }
  VertexSet out(universe);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 1) throw ParseError(l.number, "expected one vertex per line");
    auto v = detail::parse_uint(l.tokens[0], l.number);
    if (v >= universe) throw ParseError(l.number, "vertex out of range");
    out.insert(static_cast<Vertex>(v));
  }
  return out;
}

inline void write_vertex_set(std::ostream& out, const VertexSet& set) {
  out << "vset " << set.universe() << '\n';
  for (Vertex v : set) out << v << '\n';
}

}  // namespace rhc
