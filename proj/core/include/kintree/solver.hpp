#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "kintree/certificates.hpp"
#include "kintree/graph.hpp"
#include "kintree/linker.hpp"

namespace kintree {

/// How an absorption step that broke the decomposition was resolved.
enum class AbsorbCase : int {
  KLinkedTree,        ///< the linker found a tree in K' ∪ Q
  KSquare,            ///< N_K'(w) = {s_2, s_k}; excluded by girth >= 5
  KNearSide,          ///< N_K'(w) = {s_2, s'_{k-1}} or its mirror image
  KFarNoP1,           ///< N_K'(w) = {s'_3, s'_{k-1}}, w misses P_1
  KFarDeepP1,         ///< ... w meets P_1 away from s_1 and s'_1
  KFarDeepP1WithS1,   ///< ... and is also adjacent to s_1 (k = 5)
  KFarS1,             ///< ... N_P1(w) = {s_1} (k = 5)
  KFarInnerS1,        ///< ... N_P1(w) = {s'_1}, k = 5
  KEscalate,          ///< ... N_P1(w) = {s'_1}, k = 6: K ∪ {w} is a K4-structure
  K4LinkedTree,       ///< corner-pair cut failed, linker found a tree
  K4PairTree,         ///< corner-pair cut failed, explicit tree around s_ad
  K4SingleTree,       ///< subdivision cut failed
  Count,
};

inline constexpr std::size_t kAbsorbCaseCount = static_cast<std::size_t>(AbsorbCase::Count);

[[nodiscard]] std::string_view to_string(AbsorbCase c);

/// A k-structure (k = 6) that grew into a K4-structure by adding `apex`.
///
/// `source` is the k-structure after normalization: `rotation` is the old
/// index that became s_1, and `reflected` tells whether the cycle orientation
/// was reversed afterwards. The K4 labelling is a = apex, b = s_1, c = s_3,
/// d = s_5, s_ab = s'_1, s_ac = s'_3, s_ad = s'_5, s_bc = s_2, s_bd = s_6,
/// s_cd = s_4 in terms of `source`.
struct EscalateK4 {
  K4Structure structure;
  KStructure source;
  Vertex apex = -1;
  int rotation = 0;
  bool reflected = false;
};

/// Counters filled in by the solver when a Diagnostics object is supplied.
struct Diagnostics {
  LinkStats link;
  std::array<int, kAbsorbCaseCount> cases{};
  int absorbed_vertices = 0;
  std::optional<EscalateK4> escalation;

  [[nodiscard]] int hits(AbsorbCase c) const { return cases[static_cast<std::size_t>(c)]; }
};

struct SolveOptions {
  /// Re-run the certificate verifiers on intermediate and final results.
  bool paranoid = false;
  Diagnostics* diagnostics = nullptr;
};

using GrowOutcome = std::variant<InducedTree, KStructure>;
using KAbsorbOutcome = std::variant<InducedTree, KStructure, EscalateK4>;
using K4AbsorbOutcome = std::variant<InducedTree, K4Structure>;

/// Grows a tree terminal by terminal from a shortest x_1-x_2 path. Returns a
/// tree covering all terminals, or the k-structure met while adding x_k.
/// Terminals must be distinct vertices of degree 1 in one component of g, and
/// girth(g) >= k (GirthTooSmall / Disconnected otherwise).
[[nodiscard]] GrowOutcome grow_initial_tree(const Graph& g, int k,
                                            std::span<const Vertex> terminals,
                                            const SolveOptions& options = {});

/// Absorbs the vertices outside `structure` one at a time in ascending id
/// order while the structure keeps decomposing the absorbed subgraph. Returns
/// the structure itself when it decomposes g, a tree covering its terminals,
/// or (k = 6 only) the K4-structure formed with one more vertex. Trees list
/// their terminals in the order of `structure`.
/// Requires k >= 5 and girth(g) >= k; the girth is not rechecked.
[[nodiscard]] KAbsorbOutcome absorb_into_k_structure(const Graph& g, const KStructure& structure,
                                                     const SolveOptions& options = {});

/// K4 counterpart of absorb_into_k_structure, for graphs of girth 6.
[[nodiscard]] K4AbsorbOutcome absorb_into_k4_structure(const Graph& g,
                                                       const K4Structure& structure,
                                                       const SolveOptions& options = {});

/// Decides whether an induced tree of g contains all of `terminals`.
///
/// The terminals need not be pendant: a pendant neighbour is attached to each
/// of them internally and removed again from the answer. Certificates are
/// returned over the vertices of g with each path starting at the requested
/// vertex; when that vertex is not pendant in g the path may consist of it
/// alone, so such certificates must be checked with verify_result.
///
/// Errors: UnsupportedK (k < 5), TerminalCountMismatch, DuplicateTerminals,
/// GirthTooSmall.
[[nodiscard]] SolveResult k_in_a_tree(const Graph& g, int k, std::span<const Vertex> terminals,
                                      const SolveOptions& options = {});

/// Checks any SolveResult against g and the requested terminals. Structure
/// certificates are lifted onto g plus one pendant per terminal and must pass
/// both the structural and the decomposition verifier there.
[[nodiscard]] Verdict verify_result(const Graph& g, std::span<const Vertex> terminals,
                                    const SolveResult& result);

}  // namespace kintree
