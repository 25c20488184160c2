#include "kintree/certificates.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace kintree {

std::string_view to_string(VerifyFailure failure) {
  switch (failure) {
    case VerifyFailure::None: return "ok";
    case VerifyFailure::WrongArity: return "wrong_arity";
    case VerifyFailure::PathTooShort: return "path_too_short";
    case VerifyFailure::VertexOutOfRange: return "vertex_out_of_range";
    case VerifyFailure::VertexRepeated: return "vertex_repeated";
    case VerifyFailure::MissingEdge: return "missing_edge";
    case VerifyFailure::ExtraEdge: return "extra_edge";
    case VerifyFailure::TerminalNotPendant: return "terminal_not_pendant";
    case VerifyFailure::Empty: return "empty";
    case VerifyFailure::NotConnected: return "not_connected";
    case VerifyFailure::HasCycle: return "has_cycle";
    case VerifyFailure::MissingTerminal: return "missing_terminal";
    case VerifyFailure::NotSeparated: return "not_separated";
  }
  return "unknown";
}

// ------------------------------------------------------------- KStructure

std::vector<Vertex> KStructure::terminals() const {
  std::vector<Vertex> out;
  out.reserve(paths.size());
  for (const Path& p : paths) out.push_back(p.front());
  return out;
}

std::vector<Vertex> KStructure::vertices() const {
  std::vector<Vertex> out;
  for (const Path& p : paths) out.insert(out.end(), p.begin(), p.end());
  return out;
}

KStructure KStructure::rotated(int first) const {
  KStructure out;
  const int n = k();
  out.paths.reserve(paths.size());
  for (int i = 0; i < n; ++i) out.paths.push_back(paths[index(first + i)]);
  return out;
}

KStructure KStructure::reflected() const {
  KStructure out;
  const int n = k();
  out.paths.reserve(paths.size());
  for (int i = 0; i < n; ++i) out.paths.push_back(paths[index(-i)]);
  return out;
}

// ------------------------------------------------------------ K4Structure

int K4Structure::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int p = 0; p < 6; ++p) {
    if (kPairs[static_cast<std::size_t>(p)][0] == i && kPairs[static_cast<std::size_t>(p)][1] == j) {
      return p;
    }
  }
  return -1;
}

std::vector<Vertex> K4Structure::terminals() const {
  std::vector<Vertex> out;
  for (const Path& p : paths) out.push_back(p.front());
  return out;
}

std::vector<Vertex> K4Structure::vertices() const {
  std::vector<Vertex> out(branch.begin(), branch.end());
  for (const Path& p : paths) out.insert(out.end(), p.begin(), p.end());
  return out;
}

K4Structure K4Structure::relabelled(const std::array<int, 4>& perm) const {
  K4Structure out;
  for (int i = 0; i < 4; ++i) {
    out.branch[static_cast<std::size_t>(i)] = branch[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
  }
  for (int p = 0; p < 6; ++p) {
    const auto [i, j] = kPairs[static_cast<std::size_t>(p)];
    out.paths[static_cast<std::size_t>(p)] =
        path(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return out;
}

// ------------------------------------------------------------ verifiers

namespace {

constexpr int kNone = -1;

// Role of a structure vertex: which path (or corner) it belongs to and where.
struct Slot {
  int group = kNone;  // path index, or 100 + corner for K4 corners
  int pos = kNone;
};

constexpr int kCornerGroup = 100;

Verdict check_paths(const Graph& g, std::span<const Path> paths, std::vector<Slot>& slots) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    if (p.size() < 2) return Verdict::fail(VerifyFailure::PathTooShort, static_cast<int>(i));
    for (std::size_t pos = 0; pos < p.size(); ++pos) {
      const Vertex v = p[pos];
      if (!g.contains(v)) return Verdict::fail(VerifyFailure::VertexOutOfRange, static_cast<int>(i));
      Slot& s = slots[static_cast<std::size_t>(v)];
      if (s.group != kNone) return Verdict::fail(VerifyFailure::VertexRepeated, static_cast<int>(i));
      s = {static_cast<int>(i), static_cast<int>(pos)};
    }
    for (std::size_t pos = 0; pos + 1 < p.size(); ++pos) {
      if (!g.adjacent(p[pos], p[pos + 1])) {
        return Verdict::fail(VerifyFailure::MissingEdge, static_cast<int>(i));
      }
    }
  }
  return Verdict::pass();
}

bool consecutive_on_path(const Slot& a, const Slot& b) {
  return a.group == b.group && a.group < kCornerGroup && std::abs(a.pos - b.pos) == 1;
}

Verdict check_terminals_pendant(const Graph& g, std::span<const Path> paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (g.degree(paths[i].front()) != 1) {
      return Verdict::fail(VerifyFailure::TerminalNotPendant, static_cast<int>(i));
    }
  }
  return Verdict::pass();
}

bool separated(const Graph& g, VertexMask& allowed, std::initializer_list<Vertex> cut,
               Vertex source, const std::vector<Vertex>& terminals) {
  std::vector<std::uint8_t> saved;
  for (Vertex c : cut) saved.push_back(allowed[static_cast<std::size_t>(c)]);
  for (Vertex c : cut) allowed[static_cast<std::size_t>(c)] = 0;
  const VertexMask comp = detail::component_mask(g, allowed, source);
  std::size_t idx = 0;
  for (Vertex c : cut) allowed[static_cast<std::size_t>(c)] = saved[idx++];
  return std::none_of(terminals.begin(), terminals.end(), [&](Vertex t) {
    return t != source && comp[static_cast<std::size_t>(t)] != 0;
  });
}

}  // namespace

Verdict verify_induced_tree(const Graph& g, const InducedTree& t) {
  if (t.vertices.empty()) return Verdict::fail(VerifyFailure::Empty);
  for (Vertex v : t.vertices) {
    if (!g.contains(v)) return Verdict::fail(VerifyFailure::VertexOutOfRange);
  }
  for (std::size_t i = 0; i < t.terminals.size(); ++i) {
    if (!t.vertices.contains(t.terminals[i])) {
      return Verdict::fail(VerifyFailure::MissingTerminal, static_cast<int>(i));
    }
  }
  const VertexMask inside = t.vertices.to_mask(g.vertex_count());
  std::size_t half_edges = 0;
  for (Vertex v : t.vertices) {
    for (Vertex x : g.neighbors(v)) half_edges += inside[static_cast<std::size_t>(x)];
  }
  const VertexMask comp = detail::component_mask(g, inside, t.vertices.items().front());
  const auto reached = static_cast<std::size_t>(std::count(comp.begin(), comp.end(), 1));
  if (reached != t.vertices.size()) return Verdict::fail(VerifyFailure::NotConnected);
  if (half_edges / 2 != t.vertices.size() - 1) return Verdict::fail(VerifyFailure::HasCycle);
  return Verdict::pass();
}

Verdict verify_k_structure(const Graph& g, const KStructure& k) {
  const int size = k.k();
  if (size < 3) return Verdict::fail(VerifyFailure::WrongArity);
  std::vector<Slot> slots(g.vertex_count());
  if (auto v = check_paths(g, k.paths, slots); !v) return v;

  auto is_cycle_pair = [&](const Slot& a, const Slot& b) {
    if (a.group == b.group) return false;
    const auto last_a = static_cast<int>(k.paths[static_cast<std::size_t>(a.group)].size()) - 1;
    const auto last_b = static_cast<int>(k.paths[static_cast<std::size_t>(b.group)].size()) - 1;
    if (a.pos != last_a || b.pos != last_b) return false;
    const int d = (a.group - b.group + size) % size;
    return d == 1 || d == size - 1;
  };

  for (int i = 0; i < size; ++i) {
    if (!g.adjacent(k.cycle_vertex(i), k.cycle_vertex(i + 1))) {
      return Verdict::fail(VerifyFailure::MissingEdge, i);
    }
  }
  for (int i = 0; i < size; ++i) {
    for (Vertex u : k.paths[static_cast<std::size_t>(i)]) {
      const Slot& su = slots[static_cast<std::size_t>(u)];
      for (Vertex x : g.neighbors(u)) {
        const Slot& sx = slots[static_cast<std::size_t>(x)];
        if (sx.group == kNone) continue;
        if (!consecutive_on_path(su, sx) && !is_cycle_pair(su, sx)) {
          return Verdict::fail(VerifyFailure::ExtraEdge, i);
        }
      }
    }
  }
  return check_terminals_pendant(g, k.paths);
}

Verdict verify_k4_structure(const Graph& g, const K4Structure& k) {
  std::vector<Slot> slots(g.vertex_count());
  for (int c = 0; c < 4; ++c) {
    const Vertex v = k.corner(c);
    if (!g.contains(v)) return Verdict::fail(VerifyFailure::VertexOutOfRange, c);
    if (slots[static_cast<std::size_t>(v)].group != kNone) {
      return Verdict::fail(VerifyFailure::VertexRepeated, c);
    }
    slots[static_cast<std::size_t>(v)] = {kCornerGroup + c, 0};
  }
  if (auto v = check_paths(g, k.paths, slots); !v) return v;

  auto corner_edge = [&](const Slot& corner, const Slot& other) {
    if (corner.group < kCornerGroup || other.group >= kCornerGroup || other.group == kNone) {
      return false;
    }
    const Path& p = k.paths[static_cast<std::size_t>(other.group)];
    if (other.pos != static_cast<int>(p.size()) - 1) return false;
    const auto& pair = K4Structure::kPairs[static_cast<std::size_t>(other.group)];
    const int c = corner.group - kCornerGroup;
    return pair[0] == c || pair[1] == c;
  };

  for (int p = 0; p < 6; ++p) {
    const auto [i, j] = K4Structure::kPairs[static_cast<std::size_t>(p)];
    const Vertex s = k.paths[static_cast<std::size_t>(p)].back();
    if (!g.adjacent(k.corner(i), s) || !g.adjacent(k.corner(j), s)) {
      return Verdict::fail(VerifyFailure::MissingEdge, p);
    }
  }
  for (Vertex u : k.vertices()) {
    const Slot& su = slots[static_cast<std::size_t>(u)];
    for (Vertex x : g.neighbors(u)) {
      const Slot& sx = slots[static_cast<std::size_t>(x)];
      if (sx.group == kNone) continue;
      if (!consecutive_on_path(su, sx) && !corner_edge(su, sx) && !corner_edge(sx, su)) {
        return Verdict::fail(VerifyFailure::ExtraEdge,
                             su.group >= kCornerGroup ? su.group - kCornerGroup : su.group);
      }
    }
  }
  return check_terminals_pendant(g, k.paths);
}

Verdict verify_k_decomposition(const Graph& g, const KStructure& k) {
  if (auto v = verify_k_structure(g, k); !v) {
    throw Error(ErrorCode::InvalidStructure,
                std::string("k-structure fails verification: ") + std::string(to_string(v.reason)));
  }
  const int failed =
      detail::first_k_decomposition_failure(g, k, VertexMask(g.vertex_count(), 1));
  return failed < 0 ? Verdict::pass() : Verdict::fail(VerifyFailure::NotSeparated, failed);
}

Verdict verify_k4_decomposition(const Graph& g, const K4Structure& k) {
  if (auto v = verify_k4_structure(g, k); !v) {
    throw Error(ErrorCode::InvalidStructure,
                std::string("K4-structure fails verification: ") + std::string(to_string(v.reason)));
  }
  const int failed =
      detail::first_k4_decomposition_failure(g, k, VertexMask(g.vertex_count(), 1));
  return failed < 0 ? Verdict::pass() : Verdict::fail(VerifyFailure::NotSeparated, failed);
}

TreeShape tree_shape(const Graph& g, const VertexSet& tree) {
  const VertexMask inside = tree.to_mask(g.vertex_count());
  TreeShape shape;
  shape.min_branch_degree = std::numeric_limits<int>::max();
  for (Vertex v : tree) {
    int deg = 0;
    for (Vertex x : g.neighbors(v)) deg += inside[static_cast<std::size_t>(x)];
    if (deg == 1) ++shape.leaves;
    if (deg >= 3) {
      ++shape.branch_vertices;
      shape.max_branch_degree = std::max(shape.max_branch_degree, deg);
      shape.min_branch_degree = std::min(shape.min_branch_degree, deg);
    }
  }
  if (shape.branch_vertices == 0) shape.min_branch_degree = 0;
  return shape;
}

bool satisfies_branch_bound(const TreeShape& shape) {
  if (shape.leaves < 2) return false;
  if (shape.branch_vertices > shape.leaves - 2) return false;
  if (shape.branch_vertices == shape.leaves - 2 && shape.branch_vertices > 0) {
    return shape.max_branch_degree == 3 && shape.min_branch_degree == 3;
  }
  return true;
}

namespace detail {

int first_k_decomposition_failure(const Graph& g, const KStructure& k, const VertexMask& allowed) {
  VertexMask mask = allowed;
  const std::vector<Vertex> terminals = k.terminals();
  for (int i = 0; i < k.k(); ++i) {
    if (!separated(g, mask, {k.cycle_vertex(i)}, k.terminal(i), terminals)) return i;
  }
  return -1;
}

int first_k4_decomposition_failure(const Graph& g, const K4Structure& k, const VertexMask& allowed) {
  VertexMask mask = allowed;
  const std::vector<Vertex> terminals = k.terminals();
  for (int p = 0; p < 6; ++p) {
    const auto [i, j] = K4Structure::kPairs[static_cast<std::size_t>(p)];
    if (!separated(g, mask, {k.corner(i), k.corner(j)}, k.terminal(i, j), terminals)) return p;
  }
  for (int p = 0; p < 6; ++p) {
    const auto [i, j] = K4Structure::kPairs[static_cast<std::size_t>(p)];
    if (!separated(g, mask, {k.subdivision(i, j)}, k.terminal(i, j), terminals)) return 6 + p;
  }
  return -1;
}

VertexSet prune_to_terminals(const Graph& g, const VertexSet& tree,
                             const std::vector<Vertex>& terminals) {
  const std::size_t n = g.vertex_count();
  VertexMask inside = tree.to_mask(n);
  VertexMask keep(n, 0);
  for (Vertex t : terminals) keep[static_cast<std::size_t>(t)] = 1;
  std::vector<int> deg(n, 0);
  std::vector<Vertex> leaves;
  for (Vertex v : tree) {
    for (Vertex x : g.neighbors(v)) deg[static_cast<std::size_t>(v)] += inside[static_cast<std::size_t>(x)];
    if (deg[static_cast<std::size_t>(v)] <= 1 && !keep[static_cast<std::size_t>(v)]) leaves.push_back(v);
  }
  std::size_t remaining = tree.size();
  while (!leaves.empty() && remaining > 1) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    if (!inside[static_cast<std::size_t>(v)]) continue;
    inside[static_cast<std::size_t>(v)] = 0;
    --remaining;
    for (Vertex x : g.neighbors(v)) {
      const auto dx = static_cast<std::size_t>(x);
      if (!inside[dx]) continue;
      if (--deg[dx] <= 1 && !keep[dx]) leaves.push_back(x);
    }
  }
  return VertexSet::from_mask(inside);
}

}  // namespace detail

}  // namespace kintree
