#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "kintree/graph.hpp"

namespace kintree {

/// Vertex set whose induced subgraph is a tree containing `terminals`.
struct InducedTree {
  VertexSet vertices;
  std::vector<Vertex> terminals;

  friend bool operator==(const InducedTree&, const InducedTree&) = default;
};

/// A cycle s_1..s_k where each s_i carries a pendant path P_i = x_i..s_i.
///
/// `paths[i]` is stored terminal-first, so `paths[i].front()` is x_i and
/// `paths[i].back()` is s_i; consecutive entries of `paths` are consecutive
/// on the cycle. Indices are 0-based throughout.
struct KStructure {
  std::vector<Path> paths;

  [[nodiscard]] int k() const { return static_cast<int>(paths.size()); }
  [[nodiscard]] Vertex terminal(int i) const { return paths[index(i)].front(); }
  [[nodiscard]] Vertex cycle_vertex(int i) const { return paths[index(i)].back(); }
  /// Neighbour of s_i along P_i; aliases x_i when P_i is a single edge.
  [[nodiscard]] Vertex inner(int i) const {
    const Path& p = paths[index(i)];
    return p.size() >= 2 ? p[p.size() - 2] : p.front();
  }
  [[nodiscard]] std::vector<Vertex> terminals() const;
  [[nodiscard]] std::vector<Vertex> vertices() const;

  /// Relabels so that old index `first` becomes index 0 (cyclic rotation).
  [[nodiscard]] KStructure rotated(int first) const;
  /// Reverses the cycle orientation while keeping index 0 in place.
  [[nodiscard]] KStructure reflected() const;

  friend bool operator==(const KStructure&, const KStructure&) = default;

 private:
  [[nodiscard]] std::size_t index(int i) const {
    const int k = static_cast<int>(paths.size());
    return static_cast<std::size_t>(((i % k) + k) % k);
  }
};

/// Branch labels of a K4-structure.
enum Corner : int { kA = 0, kB = 1, kC = 2, kD = 3 };

/// Subdivided K4 on branch vertices a,b,c,d. The edge between corners i < j is
/// subdivided by s_ij, which carries a pendant path P_ij = x_ij..s_ij.
struct K4Structure {
  std::array<Vertex, 4> branch{};
  /// Indexed by pair_index(i, j) in the order ab, ac, ad, bc, bd, cd.
  std::array<Path, 6> paths;

  static constexpr std::array<std::array<int, 2>, 6> kPairs{
      {{kA, kB}, {kA, kC}, {kA, kD}, {kB, kC}, {kB, kD}, {kC, kD}}};
  static constexpr std::array<std::string_view, 6> kPairNames{"ab", "ac", "ad", "bc", "bd", "cd"};
  static constexpr std::array<std::string_view, 4> kCornerNames{"a", "b", "c", "d"};

  [[nodiscard]] static int pair_index(int i, int j);

  [[nodiscard]] const Path& path(int i, int j) const {
    return paths[static_cast<std::size_t>(pair_index(i, j))];
  }
  [[nodiscard]] Vertex terminal(int i, int j) const { return path(i, j).front(); }
  [[nodiscard]] Vertex subdivision(int i, int j) const { return path(i, j).back(); }
  [[nodiscard]] Vertex corner(int i) const { return branch[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::vector<Vertex> terminals() const;
  [[nodiscard]] std::vector<Vertex> vertices() const;

  /// New corner i is old corner perm[i]; paths follow their corner pairs.
  [[nodiscard]] K4Structure relabelled(const std::array<int, 4>& perm) const;

  friend bool operator==(const K4Structure&, const K4Structure&) = default;
};

/// The terminal partition reported when the terminals span several components.
struct Disconnected {
  std::vector<std::vector<Vertex>> components;

  friend bool operator==(const Disconnected&, const Disconnected&) = default;
};

/// Tree | decomposing k-structure | decomposing K4-structure | Disconnected.
using SolveResult = std::variant<InducedTree, KStructure, K4Structure, Disconnected>;

// ------------------------------------------------------------- verification

enum class VerifyFailure {
  None,
  WrongArity,          ///< wrong number of paths, or k too small
  PathTooShort,        ///< a pendant path has no edge
  VertexOutOfRange,
  VertexRepeated,      ///< named vertices or paths overlap
  MissingEdge,         ///< a required path/cycle/corner edge is absent
  ExtraEdge,           ///< an edge among the structure's vertices is not allowed
  TerminalNotPendant,  ///< an x has degree other than one in the host graph
  Empty,
  NotConnected,
  HasCycle,
  MissingTerminal,
  NotSeparated,        ///< a cut condition of the decomposition fails
};

[[nodiscard]] std::string_view to_string(VerifyFailure failure);

/// Outcome of a verifier: `ok`, or the violated invariant plus an index
/// (path index, pair index or condition index depending on the check).
struct Verdict {
  VerifyFailure reason = VerifyFailure::None;
  int index = -1;

  [[nodiscard]] bool ok() const { return reason == VerifyFailure::None; }
  explicit operator bool() const { return ok(); }

  static Verdict pass() { return {}; }
  static Verdict fail(VerifyFailure r, int i = -1) { return {r, i}; }
};

[[nodiscard]] Verdict verify_induced_tree(const Graph& g, const InducedTree& t);
[[nodiscard]] Verdict verify_k_structure(const Graph& g, const KStructure& k);
[[nodiscard]] Verdict verify_k4_structure(const Graph& g, const K4Structure& k);

/// Checks that every s_i separates x_i from the other terminals.
/// Throws InvalidStructure when `k` is not a valid k-structure of `g`.
[[nodiscard]] Verdict verify_k_decomposition(const Graph& g, const KStructure& k);

/// Checks the 12 cut conditions. The failing index is 0..5 for the corner pair
/// cuts {i, j} and 6..11 for the subdivision cuts {s_ij}, pairs in ab..cd
/// order. Throws InvalidStructure when `k` is not a valid K4-structure of `g`.
[[nodiscard]] Verdict verify_k4_decomposition(const Graph& g, const K4Structure& k);

/// Leaf and branch-vertex statistics of an induced tree.
struct TreeShape {
  int leaves = 0;
  int branch_vertices = 0;
  int max_branch_degree = 0;
  int min_branch_degree = 0;
};

[[nodiscard]] TreeShape tree_shape(const Graph& g, const VertexSet& tree);

/// Branch-vertex bound for trees: at most leaves-2 branch vertices, all of
/// degree three when the bound is tight. Trees on fewer than two vertices
/// are rejected.
[[nodiscard]] bool satisfies_branch_bound(const TreeShape& shape);

namespace detail {

/// First failing decomposition index inside g[allowed], or -1.
int first_k_decomposition_failure(const Graph& g, const KStructure& k,
                                  const VertexMask& allowed);

/// First failing K4 cut condition inside g[allowed] (numbering as in
/// verify_k4_decomposition), or -1.
int first_k4_decomposition_failure(const Graph& g, const K4Structure& k,
                                   const VertexMask& allowed);

/// Removes non-terminal leaves until every leaf is a terminal.
VertexSet prune_to_terminals(const Graph& g, const VertexSet& tree,
                             const std::vector<Vertex>& terminals);

}  // namespace detail

}  // namespace kintree
