#include "kintree/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace kintree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::GirthTooSmall: return "GirthTooSmall";
    case ErrorCode::DuplicateTerminals: return "DuplicateTerminals";
    case ErrorCode::TerminalCountMismatch: return "TerminalCountMismatch";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoAttachment: return "NoAttachment";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::InternalCaseExhaustion: return "InternalCaseExhaustion";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::from_mask(const VertexMask& mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.items_.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) items_.erase(it);
}

VertexMask VertexSet::to_mask(std::size_t n) const {
  VertexMask mask(n, 0);
  for (Vertex v : items_) {
    if (v >= 0 && static_cast<std::size_t>(v) < n) mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    }
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw Error(ErrorCode::InvalidGraph, "parallel edge at vertex " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  // Search the shorter list.
  const auto& a = adjacency_[static_cast<std::size_t>(u)];
  const auto& b = adjacency_[static_cast<std::size_t>(v)];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

bool Graph::validate() const {
  std::size_t half_edges = 0;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    const auto& adj = adjacency_[u];
    if (!std::is_sorted(adj.begin(), adj.end())) return false;
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) return false;
    for (Vertex v : adj) {
      if (!contains(v) || static_cast<std::size_t>(v) == u) return false;
      const auto& back = adjacency_[static_cast<std::size_t>(v)];
      if (!std::binary_search(back.begin(), back.end(), static_cast<Vertex>(u))) return false;
    }
    half_edges += adj.size();
  }
  return half_edges == 2 * edge_count_;
}

// -------------------------------------------------------------------- girth

Girth girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr int kUnseen = -1;
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kUnseen);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (std::size_t root = 0; root < n; ++root) {
    queue.clear();
    queue.push_back(static_cast<Vertex>(root));
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const auto du = static_cast<std::size_t>(u);
      // Any cycle closed from u has length >= 2 * dist(u).
      if (2 * dist[du] >= best) break;
      for (Vertex x : g.neighbors(u)) {
        const auto dx = static_cast<std::size_t>(x);
        if (dist[dx] == kUnseen) {
          dist[dx] = dist[du] + 1;
          parent[dx] = u;
          queue.push_back(x);
        } else if (parent[du] != x) {
          best = std::min(best, dist[du] + dist[dx] + 1);
        }
      }
    }
    for (Vertex v : queue) dist[static_cast<std::size_t>(v)] = kUnseen;
  }
  if (best == std::numeric_limits<int>::max()) return Girth::infinite();
  return Girth::finite(best);
}

// ----------------------------------------------------------- BFS primitives

namespace detail {

VertexMask component_mask(const Graph& g, const VertexMask& allowed, Vertex seed) {
  VertexMask seen(g.vertex_count(), 0);
  if (!allowed[static_cast<std::size_t>(seed)]) return seen;
  std::vector<Vertex> stack{seed};
  seen[static_cast<std::size_t>(seed)] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex x : g.neighbors(u)) {
      const auto dx = static_cast<std::size_t>(x);
      if (allowed[dx] && !seen[dx]) {
        seen[dx] = 1;
        stack.push_back(x);
      }
    }
  }
  return seen;
}

namespace {

Path unwind(const std::vector<Vertex>& parent, Vertex end) {
  Path path;
  for (Vertex v = end; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Path shortest_path_to_attachment(const Graph& g, const VertexMask& allowed, Vertex source,
                                 const VertexMask& target) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, -1);
  VertexMask seen(n, 0);
  std::deque<Vertex> queue{source};
  seen[static_cast<std::size_t>(source)] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const auto nbrs = g.neighbors(u);
    if (std::any_of(nbrs.begin(), nbrs.end(),
                    [&](Vertex x) { return target[static_cast<std::size_t>(x)] != 0; })) {
      return unwind(parent, u);
    }
    for (Vertex x : nbrs) {
      const auto dx = static_cast<std::size_t>(x);
      if (allowed[dx] && !seen[dx]) {
        seen[dx] = 1;
        parent[dx] = u;
        queue.push_back(x);
      }
    }
  }
  throw Error(ErrorCode::NoAttachment,
              "no vertex reachable from " + std::to_string(source) + " touches the target set");
}

Path shortest_path(const Graph& g, const VertexMask& allowed, Vertex from, Vertex to) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, -1);
  VertexMask seen(n, 0);
  std::deque<Vertex> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (u == to) return unwind(parent, u);
    for (Vertex x : g.neighbors(u)) {
      const auto dx = static_cast<std::size_t>(x);
      if (allowed[dx] && !seen[dx]) {
        seen[dx] = 1;
        parent[dx] = u;
        queue.push_back(x);
      }
    }
  }
  return {};
}

}  // namespace detail

VertexSet connected_component(const Graph& g, const VertexSet& removed, Vertex seed) {
  if (!g.contains(seed)) {
    throw Error(ErrorCode::PreconditionViolated,
                "seed " + std::to_string(seed) + " is not a vertex of the graph");
  }
  if (removed.contains(seed)) {
    throw Error(ErrorCode::PreconditionViolated, "seed lies in the removed set");
  }
  VertexMask allowed(g.vertex_count(), 1);
  for (Vertex v : removed) {
    if (g.contains(v)) allowed[static_cast<std::size_t>(v)] = 0;
  }
  return VertexSet::from_mask(detail::component_mask(g, allowed, seed));
}

Path shortest_path_to_attachment(const Graph& g, const VertexSet& allowed, Vertex source,
                                 const VertexSet& target) {
  if (!g.contains(source) || !allowed.contains(source)) {
    throw Error(ErrorCode::PreconditionViolated, "source must be an allowed vertex");
  }
  const std::size_t n = g.vertex_count();
  return detail::shortest_path_to_attachment(g, allowed.to_mask(n), source, target.to_mask(n));
}

// ---------------------------------------------------------------- reduction

Reduction reduce_to_terminals(const Graph& g, std::span<const Vertex> x) {
  const std::size_t n = g.vertex_count();
  VertexMask seen(n, 0);
  for (Vertex v : x) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::PreconditionViolated,
                  "terminal " + std::to_string(v) + " is not a vertex of the graph");
    }
    if (seen[static_cast<std::size_t>(v)]++) {
      throw Error(ErrorCode::DuplicateTerminals, "vertex " + std::to_string(v) + " repeated");
    }
  }
  std::vector<Edge> edges = g.edges();
  Reduction out;
  out.originals.assign(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto y = static_cast<Vertex>(n + i);
    edges.emplace_back(x[i], y);
    out.pendants.push_back(y);
  }
  out.graph = Graph(n + x.size(), edges);
  return out;
}

VertexSet map_tree_back(const VertexSet& tree_in_reduced, const VertexSet& added_pendants) {
  std::vector<Vertex> kept;
  kept.reserve(tree_in_reduced.size());
  for (Vertex v : tree_in_reduced) {
    if (!added_pendants.contains(v)) kept.push_back(v);
  }
  return VertexSet(std::move(kept));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.to_local.assign(g.vertex_count(), -1);
  for (Vertex v : keep) {
    out.to_local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && out.to_local[static_cast<std::size_t>(v)] >= 0) {
        edges.emplace_back(out.to_local[static_cast<std::size_t>(u)],
                           out.to_local[static_cast<std::size_t>(v)]);
      }
    }
  }
  out.graph = Graph(out.to_parent.size(), edges);
  return out;
}

}  // namespace kintree
