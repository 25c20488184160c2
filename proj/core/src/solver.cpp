#include "kintree/solver.hpp"

#include <algorithm>
#include <string>

namespace kintree {

std::string_view to_string(AbsorbCase c) {
  switch (c) {
    case AbsorbCase::KLinkedTree: return "k_linked_tree";
    case AbsorbCase::KSquare: return "k_square";
    case AbsorbCase::KNearSide: return "k_near_side";
    case AbsorbCase::KFarNoP1: return "k_far_no_p1";
    case AbsorbCase::KFarDeepP1: return "k_far_deep_p1";
    case AbsorbCase::KFarDeepP1WithS1: return "k_far_deep_p1_with_s1";
    case AbsorbCase::KFarS1: return "k_far_s1";
    case AbsorbCase::KFarInnerS1: return "k_far_inner_s1";
    case AbsorbCase::KEscalate: return "k_escalate";
    case AbsorbCase::K4LinkedTree: return "k4_linked_tree";
    case AbsorbCase::K4PairTree: return "k4_pair_tree";
    case AbsorbCase::K4SingleTree: return "k4_single_tree";
    case AbsorbCase::Count: break;
  }
  return "unknown";
}

namespace {

using std::size_t;

size_t at(Vertex v) { return static_cast<size_t>(v); }

[[noreturn]] void exhausted(const std::string& what) {
  throw Error(ErrorCode::InternalCaseExhaustion, what);
}

void record(const SolveOptions& options, AbsorbCase c) {
  if (options.diagnostics != nullptr) ++options.diagnostics->cases[static_cast<size_t>(c)];
}

LinkStats* link_stats(const SolveOptions& options) {
  return options.diagnostics != nullptr ? &options.diagnostics->link : nullptr;
}

void mark(VertexMask& mask, const Path& p, std::uint8_t value = 1) {
  for (Vertex v : p) mask[at(v)] = value;
}

std::vector<Vertex> neighbours_in(const Graph& g, Vertex w, const VertexMask& mask) {
  std::vector<Vertex> out;
  for (Vertex x : g.neighbors(w)) {
    if (mask[at(x)]) out.push_back(x);
  }
  return out;
}

bool same_pair(const std::vector<Vertex>& sorted, Vertex a, Vertex b) {
  if (sorted.size() != 2) return false;
  if (a > b) std::swap(a, b);
  return sorted[0] == a && sorted[1] == b;
}

// Positions on p (from its terminal end) of the neighbours of w.
std::vector<size_t> positions_adjacent(const Graph& g, const Path& p, Vertex w) {
  std::vector<size_t> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (g.adjacent(w, p[i])) out.push_back(i);
  }
  return out;
}

InducedTree emit_tree(const Graph& g, const VertexMask& keep, std::vector<Vertex> terminals,
                      const char* where) {
  InducedTree out;
  out.vertices = detail::prune_to_terminals(g, VertexSet::from_mask(keep), terminals);
  out.terminals = std::move(terminals);
  if (!verify_induced_tree(g, out)) {
    exhausted(std::string(where) + ": constructed vertex set is not an induced tree");
  }
  return out;
}

void check_terminals(const Graph& g, std::span<const Vertex> terminals) {
  VertexMask seen(g.vertex_count(), 0);
  for (Vertex t : terminals) {
    if (!g.contains(t)) throw Error(ErrorCode::PreconditionViolated, "terminal out of range");
    if (seen[at(t)]) throw Error(ErrorCode::DuplicateTerminals, "terminal listed twice");
    seen[at(t)] = 1;
    if (g.degree(t) != 1) {
      throw Error(ErrorCode::PreconditionViolated, "terminal " + std::to_string(t) + " does not have degree 1");
    }
  }
}

// ------------------------------------------------------------- tree growth

GrowOutcome grow(const Graph& g, int k, std::span<const Vertex> x, const SolveOptions& options) {
  const size_t n = g.vertex_count();
  const VertexMask everything(n, 1);
  Path first = detail::shortest_path(g, everything, x[0], x[1]);
  if (first.empty()) throw Error(ErrorCode::Disconnected, "terminals lie in different components");

  InducedTree tree;
  tree.vertices = VertexSet(first);
  tree.terminals = {x[0], x[1]};

  for (size_t l = 2; l < x.size(); ++l) {
    const VertexMask in_tree = tree.vertices.to_mask(n);
    VertexMask outside(n, 1);
    for (Vertex v : tree.vertices) outside[at(v)] = 0;
    Path q;
    try {
      q = detail::shortest_path_to_attachment(g, outside, x[l], in_tree);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoAttachment) throw;
      throw Error(ErrorCode::Disconnected, "terminals lie in different components");
    }
    LinkOutcome linked = link_to_tree(g, k, tree, q, link_stats(options));
    if (auto* s = std::get_if<KStructure>(&linked)) return std::move(*s);
    tree = std::get<InducedTree>(std::move(linked));
  }
  return tree;
}

// ------------------------------------------------------ k-structure repair

// Resolves the failure of condition 0 of `kn` on H ∪ {v}.
KAbsorbOutcome repair_k(const Graph& g, KStructure kn, const VertexMask& h, Vertex v, int rotation,
                        const SolveOptions& options) {
  const size_t n = g.vertex_count();
  const int k = kn.k();
  const Vertex x1 = kn.terminal(0);
  const Vertex s1 = kn.cycle_vertex(0);

  VertexMask in_rest(n, 0);  // K' = K \ P_1
  for (int i = 1; i < k; ++i) mark(in_rest, kn.paths[static_cast<size_t>(i)]);

  VertexMask without_s1 = h;
  without_s1[at(s1)] = 0;
  const VertexMask y = detail::component_mask(g, without_s1, x1);
  const VertexMask z = detail::component_mask(g, without_s1, kn.cycle_vertex(1));
  VertexMask allowed(n, 0);
  for (size_t u = 0; u < n; ++u) allowed[u] = (y[u] || z[u]) && !in_rest[u];
  allowed[at(v)] = 1;

  const Path q = detail::shortest_path_to_attachment(g, allowed, x1, in_rest);

  InducedTree rest;
  rest.vertices = VertexSet::from_mask(in_rest);
  for (int i = 1; i < k; ++i) rest.terminals.push_back(kn.terminal(i));
  LinkOutcome linked = link_to_tree(g, k, rest, q, link_stats(options));
  if (auto* t = std::get_if<InducedTree>(&linked)) {
    record(options, AbsorbCase::KLinkedTree);
    return std::move(*t);
  }

  const Vertex w = q.back();
  const std::vector<Vertex> attach = neighbours_in(g, w, in_rest);
  const std::vector<Vertex> terminals = kn.terminals();

  if (same_pair(attach, kn.cycle_vertex(1), kn.cycle_vertex(k - 1))) {
    record(options, AbsorbCase::KSquare);
    exhausted("absorb_into_k_structure: w closes a square with s_1");
  }
  bool reflected = false;
  if (same_pair(attach, kn.inner(2), kn.cycle_vertex(k - 1))) {
    kn = kn.reflected();
    reflected = true;
  }

  const Path& p1 = kn.paths[0];
  const size_t last = p1.size() - 1;  // s_1
  const std::vector<size_t> on_p1 = positions_adjacent(g, p1, w);
  VertexMask keep = VertexSet(kn.vertices()).to_mask(n);
  keep[at(w)] = 1;

  if (same_pair(attach, kn.cycle_vertex(1), kn.inner(k - 2))) {
    // {w} ∪ P ∪ (K' \ {s_{k-1}}); s_1 stays so that P_k keeps its link to s_2.
    record(options, AbsorbCase::KNearSide);
    keep[at(kn.cycle_vertex(k - 2))] = 0;
    if (!on_p1.empty()) {
      const size_t u = on_p1.front();
      if (u + 1 >= last) exhausted("absorb_into_k_structure: w meets s_1 or s'_1 on the near side");
      for (size_t j = u + 1; j < last; ++j) keep[at(p1[j])] = 0;
    }
    return emit_tree(g, keep, terminals, "absorb_into_k_structure");
  }

  if (!same_pair(attach, kn.inner(2), kn.inner(k - 2))) {
    exhausted("absorb_into_k_structure: unexpected attachment of w to K'");
  }

  const Vertex s3 = kn.cycle_vertex(2);
  if (on_p1.empty()) {
    record(options, AbsorbCase::KFarNoP1);
    keep[at(s3)] = 0;
    return emit_tree(g, keep, terminals, "absorb_into_k_structure");
  }

  if (on_p1.front() + 1 < last) {
    // P = w x_1..u along P_1; the rest of P_1 except s_1 is dropped.
    const size_t u = on_p1.front();
    for (size_t j = u + 1; j < last; ++j) keep[at(p1[j])] = 0;
    keep[at(s3)] = 0;
    if (g.adjacent(w, p1[last])) {
      if (k != 5) exhausted("absorb_into_k_structure: w adjacent to s_1 and deep in P_1 with k != 5");
      record(options, AbsorbCase::KFarDeepP1WithS1);
      keep[at(kn.cycle_vertex(k - 2))] = 0;
    } else {
      record(options, AbsorbCase::KFarDeepP1);
    }
    return emit_tree(g, keep, terminals, "absorb_into_k_structure");
  }

  if (on_p1.size() != 1) exhausted("absorb_into_k_structure: w adjacent to both s_1 and s'_1");

  if (on_p1.front() == last) {
    if (k != 5) exhausted("absorb_into_k_structure: w adjacent to s_1 with k != 5");
    record(options, AbsorbCase::KFarS1);
    keep[at(s3)] = 0;
    keep[at(kn.cycle_vertex(3))] = 0;
    return emit_tree(g, keep, terminals, "absorb_into_k_structure");
  }

  // N_P1(w) = {s'_1}
  if (k == 5) {
    record(options, AbsorbCase::KFarInnerS1);
    keep[at(s3)] = 0;
    keep[at(kn.cycle_vertex(3))] = 0;
    return emit_tree(g, keep, terminals, "absorb_into_k_structure");
  }
  if (k != 6) exhausted("absorb_into_k_structure: w adjacent to s'_1 with k > 6");

  record(options, AbsorbCase::KEscalate);
  auto trimmed = [&](int i) {
    Path p = kn.paths[static_cast<size_t>(i)];
    p.pop_back();
    return p;
  };
  EscalateK4 up;
  up.structure.branch = {w, kn.cycle_vertex(0), kn.cycle_vertex(2), kn.cycle_vertex(4)};
  up.structure.paths = {trimmed(0), trimmed(2), trimmed(4), kn.paths[1], kn.paths[5], kn.paths[3]};
  up.source = kn;
  up.apex = w;
  up.rotation = rotation;
  up.reflected = reflected;
  if (!verify_k4_structure(g, up.structure)) {
    exhausted("absorb_into_k_structure: relabelling is not a K4-structure");
  }
  if (options.diagnostics != nullptr) options.diagnostics->escalation = up;
  return up;
}

// ----------------------------------------------------- K4-structure repair

K4AbsorbOutcome repair_k4(const Graph& g, K4Structure kn, const VertexMask& h, Vertex v, int failure,
                          const SolveOptions& options) {
  const size_t n = g.vertex_count();
  const auto& pair = K4Structure::kPairs[static_cast<size_t>(failure % 6)];
  std::array<int, 4> perm{pair[0], pair[1], 0, 0};
  {
    int slot = 2;
    for (int c = 0; c < 4; ++c) {
      if (c != pair[0] && c != pair[1]) perm[static_cast<size_t>(slot++)] = c;
    }
  }
  kn = kn.relabelled(perm);
  const std::vector<Vertex> terminals = kn.terminals();
  const Path& pab = kn.path(kA, kB);
  const Vertex xab = pab.front();

  if (failure < 6) {
    const Vertex a = kn.corner(kA);
    const Vertex b = kn.corner(kB);
    VertexMask in_rest(n, 0);  // K' = K \ (P_ab ∪ {a, b})
    for (const Path& p : kn.paths) mark(in_rest, p);
    mark(in_rest, pab, 0);
    in_rest[at(kn.corner(kC))] = 1;
    in_rest[at(kn.corner(kD))] = 1;

    VertexMask cut = h;
    cut[at(a)] = 0;
    cut[at(b)] = 0;
    const VertexMask y = detail::component_mask(g, cut, xab);
    const VertexMask z = detail::component_mask(g, cut, kn.corner(kC));
    VertexMask allowed(n, 0);
    for (size_t u = 0; u < n; ++u) allowed[u] = (y[u] || z[u]) && !in_rest[u];
    allowed[at(v)] = 1;
    const Path q = detail::shortest_path_to_attachment(g, allowed, xab, in_rest);

    InducedTree rest;
    rest.vertices = VertexSet::from_mask(in_rest);
    for (int i = 1; i < 6; ++i) rest.terminals.push_back(kn.paths[static_cast<size_t>(i)].front());
    LinkOutcome linked = link_to_tree(g, 6, rest, q, link_stats(options));
    if (auto* t = std::get_if<InducedTree>(&linked)) {
      record(options, AbsorbCase::K4LinkedTree);
      return std::move(*t);
    }

    const Vertex w = q.back();
    const std::vector<Vertex> attach = neighbours_in(g, w, in_rest);
    if (same_pair(attach, kn.subdivision(kA, kC), kn.subdivision(kB, kD))) {
      kn = kn.relabelled({kB, kA, kC, kD});
    } else if (!same_pair(attach, kn.subdivision(kB, kC), kn.subdivision(kA, kD))) {
      exhausted("absorb_into_k4_structure: unexpected attachment of w to K'");
    }
    record(options, AbsorbCase::K4PairTree);

    const Path& p = kn.path(kA, kB);
    VertexMask keep(n, 0);
    const std::vector<size_t> on_p = positions_adjacent(g, p, w);
    const size_t upto = on_p.empty() ? p.size() - 1 : on_p.front();
    for (size_t j = 0; j <= upto; ++j) keep[at(p[j])] = 1;
    keep[at(kn.corner(kA))] = 1;
    keep[at(kn.corner(kD))] = 1;
    keep[at(w)] = 1;
    for (int i = 1; i < 6; ++i) mark(keep, kn.paths[static_cast<size_t>(i)]);
    return emit_tree(g, keep, terminals, "absorb_into_k4_structure");
  }

  // Singleton condition for s_ab.
  VertexMask target(n, 0);  // K \ P_ab
  for (Vertex u : kn.vertices()) target[at(u)] = 1;
  mark(target, pab, 0);
  VertexMask allowed = h;
  allowed[at(v)] = 1;
  for (size_t u = 0; u < n; ++u) {
    if (target[u]) allowed[u] = 0;
  }
  allowed[at(pab.back())] = 0;
  const Path r = detail::shortest_path_to_attachment(g, allowed, xab, target);
  const std::vector<Vertex> attach = neighbours_in(g, r.back(), target);
  if (attach.size() != 1) exhausted("absorb_into_k4_structure: R must reach K \\ P_ab at one vertex");
  if (attach[0] == kn.corner(kB)) {
    kn = kn.relabelled({kB, kA, kC, kD});
  } else if (attach[0] != kn.corner(kA)) {
    exhausted("absorb_into_k4_structure: R must reach K \\ P_ab at a or b");
  }
  record(options, AbsorbCase::K4SingleTree);

  VertexMask keep(n, 0);
  for (Vertex u : kn.vertices()) keep[at(u)] = 1;
  mark(keep, kn.path(kA, kB), 0);
  keep[at(kn.corner(kD))] = 0;
  mark(keep, r);
  return emit_tree(g, keep, terminals, "absorb_into_k4_structure");
}

// ------------------------------------------------------------ result lifting

Path strip_pendant(const Path& local, const InducedSubgraph& sub, size_t n) {
  Path out;
  for (Vertex v : local) {
    const Vertex parent = sub.to_parent[at(v)];
    if (at(parent) < n) out.push_back(parent);
  }
  return out;
}

Disconnected partition(const Graph& g, std::span<const Vertex> x) {
  Disconnected out;
  std::vector<int> group(g.vertex_count(), -1);
  const VertexMask everything(g.vertex_count(), 1);
  for (Vertex t : x) {
    if (group[at(t)] < 0) {
      const VertexMask comp = detail::component_mask(g, everything, t);
      const int id = static_cast<int>(out.components.size());
      for (size_t u = 0; u < comp.size(); ++u) {
        if (comp[u]) group[u] = id;
      }
      out.components.emplace_back();
    }
    out.components[static_cast<size_t>(group[at(t)])].push_back(t);
  }
  return out;
}

void require_valid(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidStructure, what);
}

}  // namespace

// ====================================================================== API

GrowOutcome grow_initial_tree(const Graph& g, int k, std::span<const Vertex> terminals,
                              const SolveOptions& options) {
  if (static_cast<int>(terminals.size()) != k || k < 2) {
    throw Error(ErrorCode::TerminalCountMismatch, "expected k terminals");
  }
  check_terminals(g, terminals);
  if (!girth(g).at_least(k)) throw Error(ErrorCode::GirthTooSmall, "girth below k");
  return grow(g, k, terminals, options);
}

KAbsorbOutcome absorb_into_k_structure(const Graph& g, const KStructure& structure,
                                       const SolveOptions& options) {
  if (structure.k() < 5) throw Error(ErrorCode::PreconditionViolated, "k-structure absorption needs k >= 5");
  require_valid(verify_k_structure(g, structure).ok(), "not a k-structure of the graph");

  const size_t n = g.vertex_count();
  VertexMask h = VertexSet(structure.vertices()).to_mask(n);
  for (size_t u = 0; u < n; ++u) {
    if (h[u]) continue;
    h[u] = 1;
    const int failure = detail::first_k_decomposition_failure(g, structure, h);
    if (failure < 0) {
      if (options.diagnostics != nullptr) ++options.diagnostics->absorbed_vertices;
      continue;
    }
    h[u] = 0;
    KAbsorbOutcome out = repair_k(g, structure.rotated(failure), h, static_cast<Vertex>(u), failure, options);
    if (auto* t = std::get_if<InducedTree>(&out)) t->terminals = structure.terminals();
    return out;
  }
  if (options.paranoid) {
    require_valid(verify_k_decomposition(g, structure).ok(), "absorbed structure does not decompose g");
  }
  return structure;
}

K4AbsorbOutcome absorb_into_k4_structure(const Graph& g, const K4Structure& structure,
                                         const SolveOptions& options) {
  require_valid(verify_k4_structure(g, structure).ok(), "not a K4-structure of the graph");
  if (options.paranoid) {
    const Girth gg = girth(g);
    if (gg.is_infinite() || gg.value() != 6) {
      throw Error(ErrorCode::PreconditionViolated, "K4 absorption expects girth exactly 6");
    }
  }

  const size_t n = g.vertex_count();
  VertexMask h = VertexSet(structure.vertices()).to_mask(n);
  for (size_t u = 0; u < n; ++u) {
    if (h[u]) continue;
    h[u] = 1;
    const int failure = detail::first_k4_decomposition_failure(g, structure, h);
    if (failure < 0) {
      if (options.diagnostics != nullptr) ++options.diagnostics->absorbed_vertices;
      continue;
    }
    h[u] = 0;
    K4AbsorbOutcome out = repair_k4(g, structure, h, static_cast<Vertex>(u), failure, options);
    if (auto* t = std::get_if<InducedTree>(&out)) t->terminals = structure.terminals();
    return out;
  }
  if (options.paranoid) {
    require_valid(verify_k4_decomposition(g, structure).ok(), "absorbed structure does not decompose g");
  }
  return structure;
}

SolveResult k_in_a_tree(const Graph& g, int k, std::span<const Vertex> terminals,
                        const SolveOptions& options) {
  if (k < 5) throw Error(ErrorCode::UnsupportedK, "k_in_a_tree handles k >= 5 only");
  if (static_cast<int>(terminals.size()) != k) {
    throw Error(ErrorCode::TerminalCountMismatch,
                "expected " + std::to_string(k) + " terminals, got " + std::to_string(terminals.size()));
  }
  const Reduction red = reduce_to_terminals(g, terminals);
  if (!girth(g).at_least(k)) throw Error(ErrorCode::GirthTooSmall, "girth of the graph is below k");

  const Disconnected parts = partition(g, terminals);
  if (parts.components.size() > 1) return parts;

  const size_t n = g.vertex_count();
  const VertexMask comp =
      detail::component_mask(red.graph, VertexMask(red.graph.vertex_count(), 1), red.pendants[0]);
  const InducedSubgraph sub = induced_subgraph(red.graph, VertexSet::from_mask(comp));
  std::vector<Vertex> y;
  for (Vertex p : red.pendants) y.push_back(sub.to_local[at(p)]);

  auto lift_tree = [&](const InducedTree& t) {
    InducedTree out;
    std::vector<Vertex> vs;
    for (Vertex v : t.vertices) {
      const Vertex parent = sub.to_parent[at(v)];
      if (at(parent) < n) vs.push_back(parent);
    }
    out.vertices = VertexSet(std::move(vs));
    out.terminals.assign(terminals.begin(), terminals.end());
    if (options.paranoid) require_valid(verify_induced_tree(g, out).ok(), "lifted tree rejected");
    return out;
  };

  GrowOutcome grown = grow(sub.graph, k, y, options);
  if (auto* t = std::get_if<InducedTree>(&grown)) return lift_tree(*t);

  KAbsorbOutcome absorbed = absorb_into_k_structure(sub.graph, std::get<KStructure>(grown), options);
  if (auto* t = std::get_if<InducedTree>(&absorbed)) return lift_tree(*t);

  SolveResult out;
  if (auto* ks = std::get_if<KStructure>(&absorbed)) {
    KStructure lifted;
    for (const Path& p : ks->paths) lifted.paths.push_back(strip_pendant(p, sub, n));
    out = std::move(lifted);
  } else {
    const EscalateK4& up = std::get<EscalateK4>(absorbed);
    if (k != 6) exhausted("k_in_a_tree: K4 escalation with k != 6");
    if (options.paranoid) {
      const Girth gg = girth(sub.graph);
      if (gg.is_infinite() || gg.value() != 6) exhausted("k_in_a_tree: K4 escalation on girth other than 6");
    }
    K4AbsorbOutcome final4 = absorb_into_k4_structure(sub.graph, up.structure, options);
    if (auto* t = std::get_if<InducedTree>(&final4)) return lift_tree(*t);
    const K4Structure& k4 = std::get<K4Structure>(final4);
    K4Structure lifted;
    for (size_t c = 0; c < 4; ++c) lifted.branch[c] = sub.to_parent[at(k4.branch[c])];
    for (size_t i = 0; i < 6; ++i) lifted.paths[i] = strip_pendant(k4.paths[i], sub, n);
    out = std::move(lifted);
  }
  if (options.paranoid) require_valid(verify_result(g, terminals, out).ok(), "certificate rejected");
  return out;
}

// ------------------------------------------------------------ verification

namespace {

// Prepends y_i to every path starting at x_i; each terminal exactly once.
Verdict lift_paths(std::span<Path> paths, const Graph& g, std::span<const Vertex> terminals,
                   const Reduction& red) {
  std::vector<int> used(terminals.size(), 0);
  for (size_t i = 0; i < paths.size(); ++i) {
    Path& p = paths[i];
    if (p.empty()) return Verdict::fail(VerifyFailure::PathTooShort, static_cast<int>(i));
    for (Vertex v : p) {
      if (!g.contains(v)) return Verdict::fail(VerifyFailure::VertexOutOfRange, static_cast<int>(i));
    }
    const auto it = std::find(terminals.begin(), terminals.end(), p.front());
    if (it == terminals.end()) return Verdict::fail(VerifyFailure::MissingTerminal, static_cast<int>(i));
    const auto t = static_cast<size_t>(it - terminals.begin());
    if (used[t]++ != 0) return Verdict::fail(VerifyFailure::VertexRepeated, static_cast<int>(i));
    p.insert(p.begin(), red.pendants[t]);
  }
  return Verdict::pass();
}

Verdict verify_partition(const Graph& g, std::span<const Vertex> terminals, const Disconnected& d) {
  if (d.components.size() < 2) return Verdict::fail(VerifyFailure::WrongArity);
  std::vector<Vertex> listed;
  for (const auto& part : d.components) {
    if (part.empty()) return Verdict::fail(VerifyFailure::Empty);
    for (Vertex v : part) {
      if (!g.contains(v)) return Verdict::fail(VerifyFailure::VertexOutOfRange);
      listed.push_back(v);
    }
  }
  std::vector<Vertex> wanted(terminals.begin(), terminals.end());
  std::sort(listed.begin(), listed.end());
  std::sort(wanted.begin(), wanted.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) {
    return Verdict::fail(VerifyFailure::VertexRepeated);
  }
  if (listed != wanted) return Verdict::fail(VerifyFailure::MissingTerminal);

  const VertexMask everything(g.vertex_count(), 1);
  std::vector<int> group(g.vertex_count(), -1);
  for (size_t i = 0; i < d.components.size(); ++i) {
    const VertexMask comp = detail::component_mask(g, everything, d.components[i].front());
    for (Vertex v : d.components[i]) {
      if (!comp[at(v)]) return Verdict::fail(VerifyFailure::NotConnected, static_cast<int>(i));
    }
    for (size_t u = 0; u < comp.size(); ++u) {
      if (!comp[u]) continue;
      if (group[u] >= 0) return Verdict::fail(VerifyFailure::NotSeparated, static_cast<int>(i));
      group[u] = static_cast<int>(i);
    }
  }
  return Verdict::pass();
}

}  // namespace

Verdict verify_result(const Graph& g, std::span<const Vertex> terminals, const SolveResult& result) {
  if (const auto* t = std::get_if<InducedTree>(&result)) {
    InducedTree check{t->vertices, std::vector<Vertex>(terminals.begin(), terminals.end())};
    return verify_induced_tree(g, check);
  }
  if (const auto* d = std::get_if<Disconnected>(&result)) return verify_partition(g, terminals, *d);

  const Reduction red = reduce_to_terminals(g, terminals);
  if (const auto* ks = std::get_if<KStructure>(&result)) {
    if (ks->paths.size() != terminals.size()) return Verdict::fail(VerifyFailure::WrongArity);
    KStructure lifted = *ks;
    if (Verdict v = lift_paths(lifted.paths, g, terminals, red); !v) return v;
    if (Verdict v = verify_k_structure(red.graph, lifted); !v) return v;
    return verify_k_decomposition(red.graph, lifted);
  }
  const auto& k4 = std::get<K4Structure>(result);
  if (terminals.size() != 6) return Verdict::fail(VerifyFailure::WrongArity);
  for (Vertex c : k4.branch) {
    if (!g.contains(c)) return Verdict::fail(VerifyFailure::VertexOutOfRange);
  }
  K4Structure lifted = k4;
  if (Verdict v = lift_paths(lifted.paths, g, terminals, red); !v) return v;
  if (Verdict v = verify_k4_structure(red.graph, lifted); !v) return v;
  return verify_k4_decomposition(red.graph, lifted);
}

}  // namespace kintree
