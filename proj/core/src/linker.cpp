#include "kintree/linker.hpp"

#include <algorithm>
#include <string>

namespace kintree {

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::PreconditionViolated, "link_to_tree: " + what);
}

void bump(LinkStats* stats, int LinkStats::*field) {
  if (stats != nullptr) ++(stats->*field);
}

// T rooted at an arbitrary vertex, for tree-path queries.
class RootedTree {
 public:
  RootedTree(const Graph& g, const VertexMask& in_tree, Vertex root)
      : parent_(g.vertex_count(), -1), depth_(g.vertex_count(), -1) {
    std::vector<Vertex> queue{root};
    depth_[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex x : g.neighbors(u)) {
        const auto dx = static_cast<std::size_t>(x);
        if (in_tree[dx] && depth_[dx] < 0) {
          depth_[dx] = depth_[static_cast<std::size_t>(u)] + 1;
          parent_[dx] = u;
          queue.push_back(x);
        }
      }
    }
  }

  /// The unique tree path from `u` to `v`.
  [[nodiscard]] Path path(Vertex u, Vertex v) const {
    Path head;
    Path tail;
    while (u != v) {
      if (depth(u) >= depth(v)) {
        head.push_back(u);
        u = parent(u);
      } else {
        tail.push_back(v);
        v = parent(v);
      }
    }
    head.push_back(u);
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
  }

 private:
  [[nodiscard]] int depth(Vertex v) const { return depth_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }

  std::vector<Vertex> parent_;
  std::vector<int> depth_;
};

InducedTree finish_tree(const Graph& g, const VertexMask& keep, std::vector<Vertex> terminals) {
  InducedTree out;
  out.vertices = detail::prune_to_terminals(g, VertexSet::from_mask(keep), terminals);
  out.terminals = std::move(terminals);
  if (!verify_induced_tree(g, out)) {
    throw Error(ErrorCode::InternalCaseExhaustion,
                "link_to_tree produced a vertex set that is not an induced tree");
  }
  return out;
}

}  // namespace

LinkOutcome link_to_tree(const Graph& g, int k, const InducedTree& tree, const Path& q,
                         LinkStats* stats) {
  const std::size_t n = g.vertex_count();
  const int l = static_cast<int>(tree.terminals.size()) + 1;
  if (k < 3) violated("k must be at least 3");
  if (l < 2 || l > k) violated("number of terminals out of range");
  if (q.empty()) violated("empty path");

  // --- preconditions -------------------------------------------------------
  if (!verify_induced_tree(g, tree)) violated("T is not an induced tree");
  const VertexMask in_tree = tree.vertices.to_mask(n);
  std::vector<int> deg_t(n, 0);
  for (Vertex v : tree.vertices) {
    for (Vertex x : g.neighbors(v)) deg_t[static_cast<std::size_t>(v)] += in_tree[static_cast<std::size_t>(x)];
  }
  VertexMask is_terminal(n, 0);
  for (Vertex t : tree.terminals) is_terminal[static_cast<std::size_t>(t)] = 1;
  if (tree.vertices.size() > 1) {
    for (Vertex v : tree.vertices) {
      const bool leaf = deg_t[static_cast<std::size_t>(v)] == 1;
      if (leaf != static_cast<bool>(is_terminal[static_cast<std::size_t>(v)])) {
        violated("leaves of T differ from its terminals");
      }
    }
  }

  VertexMask in_q(n, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Vertex v = q[i];
    if (!g.contains(v) || in_tree[static_cast<std::size_t>(v)] || in_q[static_cast<std::size_t>(v)]) {
      violated("Q must be a path disjoint from T");
    }
    in_q[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.adjacent(q[i - 1], v)) violated("Q is not a path");
  }
  const Vertex x_new = q.front();
  const Vertex w = q.back();
  if (g.degree(x_new) != 1) violated("the new terminal must have degree 1");
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    for (Vertex x : g.neighbors(q[i])) {
      if (in_tree[static_cast<std::size_t>(x)]) violated("a vertex of Q before w touches T");
    }
  }

  std::vector<Vertex> attachments;  // N_T(w), ascending
  for (Vertex x : g.neighbors(w)) {
    if (in_tree[static_cast<std::size_t>(x)]) attachments.push_back(x);
  }
  if (attachments.empty()) violated("w has no neighbour in T");

  std::vector<Vertex> all_terminals = tree.terminals;
  all_terminals.push_back(x_new);
  VertexMask union_mask = in_tree;
  for (Vertex v : q) union_mask[static_cast<std::size_t>(v)] = 1;

  if (attachments.size() == 1) {
    bump(stats, &LinkStats::single_attachment);
    return finish_tree(g, union_mask, std::move(all_terminals));
  }

  // --- basic paths ---------------------------------------------------------
  VertexMask is_attachment(n, 0);
  for (Vertex a : attachments) is_attachment[static_cast<std::size_t>(a)] = 1;
  const RootedTree rooted(g, in_tree, attachments.front());

  std::vector<Path> basic;  // oriented from the smaller endpoint, lexicographic
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    for (std::size_t j = i + 1; j < attachments.size(); ++j) {
      Path p = rooted.path(attachments[i], attachments[j]);
      const bool clean = std::none_of(p.begin() + 1, p.end() - 1, [&](Vertex v) {
        return is_attachment[static_cast<std::size_t>(v)] != 0;
      });
      if (!clean) continue;
      if (static_cast<int>(p.size()) < k - 1) violated("basic path shorter than k-1: girth below k");
      basic.push_back(std::move(p));
    }
  }

  auto degree_two_interior = [&](const Path& p) -> Vertex {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (deg_t[static_cast<std::size_t>(p[i])] == 2) return p[i];
    }
    return -1;
  };

  const auto branch_path = std::find_if(basic.begin(), basic.end(),
                                        [&](const Path& p) { return degree_two_interior(p) < 0; });

  if (branch_path == basic.end()) {
    // Every basic path loses one interior degree-2 vertex; a vertex shared by
    // several basic paths may settle more than one of them.
    bump(stats, &LinkStats::pruned_basic_paths);
    VertexMask s = union_mask;
    for (const Path& r : basic) {
      const bool intact = std::all_of(r.begin(), r.end(), [&](Vertex v) {
        return s[static_cast<std::size_t>(v)] != 0;
      });
      if (intact) s[static_cast<std::size_t>(degree_two_interior(r))] = 0;
    }
    return finish_tree(g, s, std::move(all_terminals));
  }

  // --- a basic path through branch vertices only ---------------------------
  const Path& r = *branch_path;
  if (l != k) violated("branch-vertex path found with fewer than k terminals");
  if (static_cast<int>(r.size()) != k - 1) violated("branch-vertex path must have k-1 vertices");

  VertexMask on_r(n, 0);
  for (Vertex v : r) on_r[static_cast<std::size_t>(v)] = 1;

  // P_i = x_i..s_i: the pendant path of T hanging from s_i off R.
  std::vector<Path> pendant;
  pendant.reserve(r.size());
  for (Vertex s : r) {
    Vertex prev = s;
    Vertex cur = -1;
    for (Vertex x : g.neighbors(s)) {
      if (in_tree[static_cast<std::size_t>(x)] && !on_r[static_cast<std::size_t>(x)]) {
        if (cur != -1) violated("vertex of the branch path has two pendant subtrees");
        cur = x;
      }
    }
    if (cur == -1) violated("vertex of the branch path has no pendant subtree");
    Path walk{s, cur};
    while (deg_t[static_cast<std::size_t>(cur)] == 2) {
      Vertex next = -1;
      for (Vertex x : g.neighbors(cur)) {
        if (in_tree[static_cast<std::size_t>(x)] && x != prev) next = x;
      }
      prev = cur;
      cur = next;
      walk.push_back(cur);
    }
    if (deg_t[static_cast<std::size_t>(cur)] != 1 || !is_terminal[static_cast<std::size_t>(cur)]) {
      violated("pendant subtree of the branch path is not a path to a terminal");
    }
    std::reverse(walk.begin(), walk.end());
    pendant.push_back(std::move(walk));
  }

  // w_i: neighbour of w on P_i closest to x_i, or s_i when there is none.
  std::vector<std::size_t> reach(pendant.size());
  for (std::size_t i = 0; i < pendant.size(); ++i) {
    const Path& p = pendant[i];
    std::size_t pos = p.size() - 1;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (g.adjacent(w, p[j])) {
        pos = j;
        break;
      }
    }
    reach[i] = pos;
  }

  auto prefixes_with_q = [&]() {
    VertexMask keep(n, 0);
    for (Vertex v : q) keep[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < pendant.size(); ++i) {
      for (std::size_t j = 0; j <= reach[i]; ++j) keep[static_cast<std::size_t>(pendant[i][j])] = 1;
    }
    return keep;
  };

  bool touches_inner = false;
  std::size_t detached = pendant.size();  // first i with w_i != s_i
  for (std::size_t i = 0; i < pendant.size(); ++i) {
    const std::size_t last = pendant[i].size() - 1;
    if (reach[i] + 1 == last) touches_inner = true;
    if (reach[i] != last && detached == pendant.size()) detached = i;
  }
  if (touches_inner) {
    // A cycle w s_1 .. s_i s'_i of length i + 2 exists on both sides, so the
    // girth bound forces k <= 4; the prefixes x_j..w_j with Q form a tree.
    bump(stats, &LinkStats::small_k_branch);
    return finish_tree(g, prefixes_with_q(), std::move(all_terminals));
  }

  if (detached == pendant.size()) {
    bump(stats, &LinkStats::structure);
    KStructure out;
    out.paths = std::move(pendant);
    out.paths.push_back(q);
    return out;
  }

  // The prefixes, Q and all of s_1..s_{k-1} carry the single cycle w s_1 .. s_{k-1};
  // removing an s_j whose pendant prefix already reaches w breaks it.
  bump(stats, &LinkStats::cut_cycle);
  VertexMask keep = prefixes_with_q();
  for (Vertex s : r) keep[static_cast<std::size_t>(s)] = 1;
  keep[static_cast<std::size_t>(r[detached])] = 0;
  return finish_tree(g, keep, std::move(all_terminals));
}

}  // namespace kintree
