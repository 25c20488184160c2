#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kintree/certificates.hpp"
#include "kintree/error.hpp"

namespace kintree {

/// JSON result documents. Vertex ids are 1-based, keys appear in a fixed
/// order and the text ends with a newline, so equal results render to equal
/// bytes.
///
///   {"status": "tree", "k": 5, "terminals": [...], "tree": {"vertices": [...]}}
///   {"status": "no_tree", "k": 7, "terminals": [...],
///    "certificate": {"type": "k_structure", "paths": [[x_1, ..., s_1], ...]}}
///   {"status": "no_tree", "k": 6, "terminals": [...],
///    "certificate": {"type": "k4_structure", "branch": {"a": .., "b": .., "c": .., "d": ..},
///                    "paths": {"ab": [x_ab, ..., s_ab], ..., "cd": [...]}}}
///   {"status": "no_tree", ..., "certificate": {"type": "exhaustive_search"}}
///   {"status": "disconnected", "k": .., "terminals": [...], "components": [[...], ...]}
///   {"status": "error", "error": {"code": "GirthTooSmall", "message": "..."}}
[[nodiscard]] std::string render_result(int k, std::span<const Vertex> terminals,
                                        const SolveResult& result);

/// no_tree decided by exhaustive search (oracle fallback); carries no labelling.
[[nodiscard]] std::string render_exhaustive_no_tree(int k, std::span<const Vertex> terminals);

[[nodiscard]] std::string render_error(ErrorCode code, std::string_view message);

struct ParsedResult {
  std::string status;
  int k = 0;
  std::vector<Vertex> terminals;  ///< 0-based
  /// Set for tree, k_structure, k4_structure and disconnected documents.
  std::optional<SolveResult> result;
  bool exhaustive = false;
  std::string error_code;
};

/// Errors: ParseError on malformed JSON or a document of the wrong shape.
[[nodiscard]] ParsedResult parse_result(std::string_view text);

}  // namespace kintree
