#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kintree/error.hpp"

namespace kintree {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ordered list of distinct vertices; consecutive entries are adjacent.
using Path = std::vector<Vertex>;

/// Per-vertex membership flags sized to a graph's vertex count.
using VertexMask = std::vector<std::uint8_t>;

/// Sorted set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet from_mask(const VertexMask& mask);

  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] std::size_t size() const { return items_.size(); }
  [[nodiscard]] bool empty() const { return items_.empty(); }
  [[nodiscard]] auto begin() const { return items_.begin(); }
  [[nodiscard]] auto end() const { return items_.end(); }
  [[nodiscard]] const std::vector<Vertex>& items() const { return items_; }

  void insert(Vertex v);
  void erase(Vertex v);

  /// Mask of length `n` with exactly this set's members flagged.
  [[nodiscard]] VertexMask to_mask(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are kept sorted so that every traversal in the library
/// visits vertices in ascending id order; certificates are reproducible as a
/// consequence. Construction rejects self-loops, parallel edges and ids out of
/// range with `ErrorCode::InvalidGraph`.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] std::size_t degree(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)].size();
  }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
  }

  /// Edges with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Re-checks symmetry, loop-freeness and sortedness of the adjacency.
  [[nodiscard]] bool validate() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Length of a shortest cycle, or infinite for forests.
class Girth {
 public:
  static Girth infinite() { return Girth{}; }
  static Girth finite(int length) { return Girth{length}; }

  [[nodiscard]] bool is_infinite() const { return !length_.has_value(); }
  [[nodiscard]] int value() const { return length_.value(); }
  [[nodiscard]] bool at_least(int bound) const {
    return is_infinite() || *length_ >= bound;
  }

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(int length) : length_(length) {}
  std::optional<int> length_;
};

[[nodiscard]] Girth girth(const Graph& g);

/// Vertex set of the component of `seed` in g minus `removed`.
[[nodiscard]] VertexSet connected_component(const Graph& g, const VertexSet& removed,
                                            Vertex seed);

/// Shortest path inside g[allowed] from `source` to the first vertex (in BFS
/// order) that has a neighbour in `target`. Throws NoAttachment when the
/// component of `source` never touches `target`.
[[nodiscard]] Path shortest_path_to_attachment(const Graph& g, const VertexSet& allowed,
                                               Vertex source, const VertexSet& target);

/// Result of attaching a fresh pendant vertex to every requested vertex.
struct Reduction {
  Graph graph;
  std::vector<Vertex> originals;  ///< x_1..x_k in the input graph
  std::vector<Vertex> pendants;   ///< y_1..y_k, with y_i adjacent only to x_i
};

[[nodiscard]] Reduction reduce_to_terminals(const Graph& g, std::span<const Vertex> x);

[[nodiscard]] VertexSet map_tree_back(const VertexSet& tree_in_reduced,
                                      const VertexSet& added_pendants);

/// Induced subgraph on `keep`, relabelled 0..|keep|-1 in ascending id order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  ///< local id -> parent id
  std::vector<Vertex> to_local;   ///< parent id -> local id, or -1
};

[[nodiscard]] InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

namespace detail {

// Mask-based primitives shared by the solver's hot loops. `allowed` masks are
// indexed by vertex id and must have length g.vertex_count().

/// Marks the component of `seed` inside g[allowed]; returns the marked mask.
VertexMask component_mask(const Graph& g, const VertexMask& allowed, Vertex seed);

/// Mask-based form of shortest_path_to_attachment.
Path shortest_path_to_attachment(const Graph& g, const VertexMask& allowed, Vertex source,
                                 const VertexMask& target);

/// Shortest path between two vertices in g[allowed]; empty if unreachable.
Path shortest_path(const Graph& g, const VertexMask& allowed, Vertex from, Vertex to);

}  // namespace detail

}  // namespace kintree
