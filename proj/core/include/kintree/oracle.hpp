#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kintree/graph.hpp"

namespace kintree {

inline constexpr int kDefaultOracleCap = 20;

/// Smallest-first exhaustive search for an induced tree of g containing every
/// terminal. Subsets of the non-terminals are tried by increasing size, so the
/// returned tree has the fewest vertices possible.
/// Errors: TooLarge when g has more than `max_n` vertices (max_n <= 63),
/// DuplicateTerminals, PreconditionViolated for ids out of range.
[[nodiscard]] std::optional<VertexSet> brute_force_find_tree(const Graph& g,
                                                             std::span<const Vertex> terminals,
                                                             int max_n = kDefaultOracleCap);

[[nodiscard]] bool brute_force_k_in_a_tree(const Graph& g, std::span<const Vertex> terminals,
                                           int max_n = kDefaultOracleCap);

// ----------------------------------------------------------------- generators

enum class InstanceKind { MinimalKStructure, SubdividedK4, Spider, RandomGirth };

[[nodiscard]] std::string_view to_string(InstanceKind kind);
/// Accepts the names printed by to_string ("minimal-k-structure", ...).
[[nodiscard]] std::optional<InstanceKind> parse_instance_kind(std::string_view name);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::RandomGirth;
  int k = 5;
  /// random-girth only: total vertex count, terminals included.
  int n = 0;
  std::uint64_t seed = 0;
  /// Edges on each pendant path (or spider leg); empty means all 1. The K4
  /// kind takes six lengths in ab, ac, ad, bc, bd, cd order.
  std::vector<int> path_lengths;
  /// random-girth only: edge probability of the core before short cycles are cut.
  double edge_probability = 0.3;
};

struct Instance {
  Graph graph;
  std::vector<Vertex> terminals;
};

/// Deterministic for a given spec. Every terminal has degree 1 and
/// girth >= k holds (girth 6 for the K4 kind, k is ignored there).
///
/// minimal-k-structure: cycle s_i = i for i < k, then the pendant paths in
///   order, each listed from s_i outwards; terminals x_1..x_k.
/// subdivided-k4: a..d = 0..3, s_ab..s_cd = 4..9, then the pendant paths;
///   terminals in ab..cd order.
/// spider: centre 0 and k legs; the leg tips are the terminals.
/// random-girth: a core of n - k vertices drawn as G(n - k, p); while the
///   girth is below k an edge of a shortest cycle is removed; components are
///   then chained by single edges and each terminal hangs off its own core
///   vertex (shared only when the core has fewer than k vertices). Terminals
///   are the last k ids. All draws come from std::mt19937_64 reduced modulo
///   the range, so the output does not depend on the standard library.
///
/// Errors: InfeasibleSpec (k < 3, non-positive lengths, wrong length count,
/// random-girth with n <= k or p outside [0, 1]).
[[nodiscard]] Instance generate(const InstanceSpec& spec);

/// Random additions that keep girth >= girth_bound and keep every terminal
/// pendant. New vertices hang off the anchor pool (and join it). Each of the
/// `extra_edges` attempts picks two pool vertices and joins them only when
/// they are at distance >= girth_bound - 1.
struct NoiseSpec {
  int extra_vertices = 0;
  int extra_edges = 0;
  int girth_bound = 5;
  std::uint64_t seed = 0;
  /// Vertices allowed to gain neighbours; empty means every non-terminal.
  std::vector<Vertex> anchors;
};

[[nodiscard]] Instance add_noise(const Instance& base, const NoiseSpec& noise);

/// A k-structure with pendant paths of length 2 that still decomposes the
/// whole graph: n - 3k further vertices are spread over the pendant paths,
/// each one joining a blob that touches only its own P_i \ {x_i}, and blobs
/// get girth-preserving chords. No induced tree covers the terminals.
/// Errors: InfeasibleSpec when k < 3 or n < 3k.
[[nodiscard]] Instance planted_k_structure(int k, int n, std::uint64_t seed);

/// Copy of the instance with vertex v renamed perm[v].
[[nodiscard]] Instance relabel(const Instance& base, std::span<const Vertex> perm);

}  // namespace kintree
