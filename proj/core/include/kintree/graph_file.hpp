#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kintree/graph.hpp"

namespace kintree {

/// Text graph format, one record per line:
///
///   c <anything>      comment, ignored (blank lines too)
///   p <n> <m>         header, exactly once and before any other record
///   e <u> <v>         edge, 1-based ids, exactly m of them
///   t <v>             terminal, 1-based, in order
///
/// `p edge <n> <m>` is accepted as well. Ids become 0-based on parsing and
/// 1-based again on serialization; nothing else in the library sees 1-based ids.
struct GraphFile {
  Graph graph;
  std::vector<Vertex> terminals;
};

/// Errors: ParseError with the offending line number.
[[nodiscard]] GraphFile parse_graph_file(std::istream& in);
[[nodiscard]] GraphFile parse_graph_text(std::string_view text);
[[nodiscard]] GraphFile read_graph_file(const std::filesystem::path& path);

/// Header, edges in ascending (u, v) order with u < v, then terminals. No
/// comments, so parse followed by serialize is byte-stable.
[[nodiscard]] std::string serialize_graph_file(const Graph& g, std::span<const Vertex> terminals);

}  // namespace kintree
