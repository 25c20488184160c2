#pragma once

#include <variant>

#include "kintree/certificates.hpp"
#include "kintree/graph.hpp"

namespace kintree {

/// Either a tree of g[T ∪ Q] covering every terminal, or the k-structure that
/// T ∪ Q forms when no such tree exists.
using LinkOutcome = std::variant<InducedTree, KStructure>;

/// Which branch of the linking procedure produced an outcome.
struct LinkStats {
  int single_attachment = 0;  ///< w has one neighbour in T
  int pruned_basic_paths = 0; ///< every basic path had a degree-2 interior vertex
  int cut_cycle = 0;          ///< branch path found, one cycle vertex deleted
  int structure = 0;          ///< branch path found, T ∪ Q is a k-structure
  int small_k_branch = 0;     ///< w touches some s'_i; only reachable for k <= 4
};

/// Links the terminal at the head of `q` to `tree`.
///
/// Preconditions (violations throw PreconditionViolated):
///   - `tree` is an induced tree whose leaves are exactly `tree.terminals`,
///     given in order x_1..x_{l-1}, with 2 <= l <= k;
///   - `q` is an induced path x_l..w disjoint from the tree, x_l has degree 1,
///     and w is the only vertex of `q` with neighbours in the tree.
/// The girth of g is assumed to be at least k; only its consequences on basic
/// path lengths are checked.
///
/// Structure outcomes list P_1..P_{k-1} in cycle order followed by P_k = q, so
/// the cycle reads s_1..s_{k-1}, w. Tree outcomes are pruned so that their
/// leaves are exactly x_1..x_l.
[[nodiscard]] LinkOutcome link_to_tree(const Graph& g, int k, const InducedTree& tree,
                                       const Path& q, LinkStats* stats = nullptr);

}  // namespace kintree
