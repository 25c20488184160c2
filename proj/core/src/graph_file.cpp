#include "kintree/graph_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace kintree {

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

long long number(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    bad(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

GraphFile parse_graph_file(std::istream& in) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<Vertex> terminals;
  std::string raw;
  std::size_t line = 0;

  auto vertex = [&](std::string_view token) {
    const long long id = number(token, line);
    if (id < 1 || id > n) bad(line, "vertex id " + std::string(token) + " outside 1.." + std::to_string(n));
    return static_cast<Vertex>(id - 1);
  };

  while (std::getline(in, raw)) {
    ++line;
    const std::vector<std::string_view> tok = split(raw);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) bad(line, "second header");
      std::size_t first = 1;
      if (tok.size() == 4) first = 2;
      else if (tok.size() != 3) bad(line, "header must read 'p <n> <m>'");
      n = number(tok[first], line);
      m = number(tok[first + 1], line);
      if (n < 0 || m < 0) bad(line, "negative count in header");
      continue;
    }
    if (n < 0) bad(line, "record before the 'p' header");
    if (tok[0] == "e") {
      if (tok.size() != 3) bad(line, "edge must read 'e <u> <v>'");
      Vertex u = vertex(tok[1]);
      Vertex v = vertex(tok[2]);
      if (u == v) bad(line, "self-loop");
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) bad(line, "duplicate edge");
      edges.emplace_back(u, v);
    } else if (tok[0] == "t") {
      if (tok.size() != 2) bad(line, "terminal must read 't <v>'");
      terminals.push_back(vertex(tok[1]));
    } else {
      bad(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) bad(line, "missing 'p' header");
  if (static_cast<long long>(edges.size()) != m) {
    bad(line, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return GraphFile{Graph(static_cast<std::size_t>(n), edges), std::move(terminals)};
}

GraphFile parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph_file(in);
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return parse_graph_file(in);
}

std::string serialize_graph_file(const Graph& g, std::span<const Vertex> terminals) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  for (Vertex t : terminals) out += "t " + std::to_string(t + 1) + "\n";
  return out;
}

}  // namespace kintree
