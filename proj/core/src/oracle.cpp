#include "kintree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace kintree {

namespace {

using std::size_t;
using Mask = std::uint64_t;

size_t at(Vertex v) { return static_cast<size_t>(v); }

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorCode::InfeasibleSpec, what);
}

bool induces_tree(const std::vector<Mask>& adj, Mask set) {
  const int size = std::popcount(set);
  int twice_edges = 0;
  for (Mask rest = set; rest != 0; rest &= rest - 1) {
    twice_edges += std::popcount(adj[static_cast<size_t>(std::countr_zero(rest))] & set);
  }
  if (twice_edges != 2 * (size - 1)) return false;
  Mask reached = set & (~set + 1);
  Mask frontier = reached;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
      next |= adj[static_cast<size_t>(std::countr_zero(rest))];
    }
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

// Mutable adjacency used while generating.
using Adjacency = std::vector<std::vector<Vertex>>;

void add_edge(Adjacency& adj, Vertex u, Vertex v) {
  adj[at(u)].push_back(v);
  adj[at(v)].push_back(u);
}

void remove_edge(Adjacency& adj, Vertex u, Vertex v) {
  auto drop = [&](Vertex from, Vertex to) {
    auto& list = adj[at(from)];
    list.erase(std::find(list.begin(), list.end(), to));
  };
  drop(u, v);
  drop(v, u);
}

bool has_edge(const Adjacency& adj, Vertex u, Vertex v) {
  const auto& list = adj[at(u)];
  return std::find(list.begin(), list.end(), v) != list.end();
}

// True when v is within `limit` steps of u, ignoring the edge {skip_a, skip_b}.
bool within(const Adjacency& adj, Vertex u, Vertex v, int limit, Vertex skip_a = -1,
            Vertex skip_b = -1) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<Vertex> queue{u};
  dist[at(u)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    if (x == v) return true;
    if (dist[at(x)] == limit) continue;
    for (Vertex y : adj[at(x)]) {
      if ((x == skip_a && y == skip_b) || (x == skip_b && y == skip_a)) continue;
      if (dist[at(y)] < 0) {
        dist[at(y)] = dist[at(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

Graph freeze(const Adjacency& adj) {
  std::vector<Edge> edges;
  for (size_t u = 0; u < adj.size(); ++u) {
    for (Vertex v : adj[u]) {
      if (static_cast<Vertex>(u) < v) edges.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return Graph(adj.size(), edges);
}

Adjacency thaw(const Graph& g) {
  Adjacency adj(g.vertex_count());
  for (size_t u = 0; u < adj.size(); ++u) {
    const auto nb = g.neighbors(static_cast<Vertex>(u));
    adj[u].assign(nb.begin(), nb.end());
  }
  return adj;
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  size_t below(size_t bound) { return static_cast<size_t>(rng_() % bound); }
  bool chance(double p) { return static_cast<double>(rng_() % 1'000'000) < p * 1'000'000.0; }

 private:
  std::mt19937_64 rng_;
};

std::vector<int> lengths_for(const InstanceSpec& spec, int count) {
  if (spec.path_lengths.empty()) return std::vector<int>(static_cast<size_t>(count), 1);
  if (static_cast<int>(spec.path_lengths.size()) != count) {
    infeasible("expected " + std::to_string(count) + " path lengths");
  }
  for (int len : spec.path_lengths) {
    if (len < 1) infeasible("path lengths must be at least 1");
  }
  return spec.path_lengths;
}

// Hangs a path of `len` edges off `base`; returns the tip.
Vertex hang_path(Adjacency& adj, Vertex base, int len) {
  Vertex prev = base;
  for (int i = 0; i < len; ++i) {
    const auto next = static_cast<Vertex>(adj.size());
    adj.emplace_back();
    add_edge(adj, prev, next);
    prev = next;
  }
  return prev;
}

Instance minimal_k_structure(const InstanceSpec& spec) {
  const int k = spec.k;
  const std::vector<int> lengths = lengths_for(spec, k);
  Adjacency adj(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) add_edge(adj, i, (i + 1) % k);
  Instance out;
  for (int i = 0; i < k; ++i) out.terminals.push_back(hang_path(adj, i, lengths[static_cast<size_t>(i)]));
  out.graph = freeze(adj);
  return out;
}

Instance subdivided_k4(const InstanceSpec& spec) {
  const std::vector<int> lengths = lengths_for(spec, 6);
  constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Adjacency adj(10);
  for (int p = 0; p < 6; ++p) {
    add_edge(adj, kPairs[p][0], 4 + p);
    add_edge(adj, kPairs[p][1], 4 + p);
  }
  Instance out;
  for (int p = 0; p < 6; ++p) out.terminals.push_back(hang_path(adj, 4 + p, lengths[static_cast<size_t>(p)]));
  out.graph = freeze(adj);
  return out;
}

Instance spider(const InstanceSpec& spec) {
  const std::vector<int> lengths = lengths_for(spec, spec.k);
  Adjacency adj(1);
  Instance out;
  for (int len : lengths) out.terminals.push_back(hang_path(adj, 0, len));
  out.graph = freeze(adj);
  return out;
}

// Every edge lying on a cycle of length `length`, the current girth.
std::vector<Edge> edges_on_shortest_cycles(const Adjacency& adj, int length) {
  std::vector<Edge> out;
  for (size_t u = 0; u < adj.size(); ++u) {
    for (Vertex v : adj[u]) {
      const auto su = static_cast<Vertex>(u);
      if (su < v && within(adj, su, v, length - 1, su, v)) out.emplace_back(su, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Instance random_girth(const InstanceSpec& spec) {
  const int k = spec.k;
  const int core = spec.n - k;
  if (core < 1) infeasible("random-girth needs n > k");
  if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0) {
    infeasible("edge probability must lie in [0, 1]");
  }
  Draw draw(spec.seed);
  Adjacency adj(static_cast<size_t>(core));
  for (int u = 0; u < core; ++u) {
    for (int v = u + 1; v < core; ++v) {
      if (draw.chance(spec.edge_probability)) add_edge(adj, u, v);
    }
  }

  for (;;) {
    const Girth current = girth(freeze(adj));
    if (current.at_least(k)) break;
    const std::vector<Edge> victims = edges_on_shortest_cycles(adj, current.value());
    const Edge e = victims[draw.below(victims.size())];
    remove_edge(adj, e.first, e.second);
  }

  // Chain the components with single edges; bridges cannot close a cycle.
  {
    const Graph g = freeze(adj);
    std::vector<int> comp(static_cast<size_t>(core), -1);
    std::vector<Vertex> earlier;
    const VertexMask all(static_cast<size_t>(core), 1);
    int count = 0;
    for (int v = 0; v < core; ++v) {
      if (comp[at(v)] >= 0) continue;
      const VertexMask mask = detail::component_mask(g, all, v);
      std::vector<Vertex> members;
      for (size_t u = 0; u < mask.size(); ++u) {
        if (mask[u]) {
          comp[u] = count;
          members.push_back(static_cast<Vertex>(u));
        }
      }
      if (!earlier.empty()) {
        add_edge(adj, members[draw.below(members.size())], earlier[draw.below(earlier.size())]);
      }
      earlier.insert(earlier.end(), members.begin(), members.end());
      ++count;
    }
  }

  std::vector<Vertex> order(static_cast<size_t>(core));
  for (int v = 0; v < core; ++v) order[at(v)] = v;
  for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw.below(i)]);

  Instance out;
  for (int j = 0; j < k; ++j) {
    out.terminals.push_back(hang_path(adj, order[static_cast<size_t>(j) % order.size()], 1));
  }
  out.graph = freeze(adj);
  return out;
}

}  // namespace

// -------------------------------------------------------------------- oracle

std::optional<VertexSet> brute_force_find_tree(const Graph& g, std::span<const Vertex> terminals,
                                               int max_n) {
  const size_t n = g.vertex_count();
  if (max_n > 63) max_n = 63;
  if (static_cast<int>(n) > max_n) {
    throw Error(ErrorCode::TooLarge, "oracle limited to " + std::to_string(max_n) + " vertices, got " +
                                         std::to_string(n));
  }
  Mask required = 0;
  for (Vertex t : terminals) {
    if (!g.contains(t)) throw Error(ErrorCode::PreconditionViolated, "terminal out of range");
    const Mask bit = Mask{1} << at(t);
    if (required & bit) throw Error(ErrorCode::DuplicateTerminals, "terminal listed twice");
    required |= bit;
  }
  std::vector<Mask> adj(n, 0);
  for (size_t u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) adj[u] |= Mask{1} << at(v);
  }
  if (required == 0) return VertexSet{};

  std::vector<Vertex> free;
  for (size_t u = 0; u < n; ++u) {
    if (!(required & (Mask{1} << u))) free.push_back(static_cast<Vertex>(u));
  }
  const size_t m = free.size();
  auto expand = [&](Mask pick) {
    Mask set = required;
    for (Mask rest = pick; rest != 0; rest &= rest - 1) {
      set |= Mask{1} << at(free[static_cast<size_t>(std::countr_zero(rest))]);
    }
    return set;
  };
  auto as_set = [&](Mask set) {
    std::vector<Vertex> vs;
    for (Mask rest = set; rest != 0; rest &= rest - 1) vs.push_back(std::countr_zero(rest));
    return VertexSet(std::move(vs));
  };

  if (induces_tree(adj, required)) return as_set(required);
  for (size_t size = 1; size <= m; ++size) {
    // Gosper's hack over all `size`-subsets of the free vertices.
    Mask pick = (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << m;
    while (pick < limit) {
      const Mask set = expand(pick);
      if (induces_tree(adj, set)) return as_set(set);
      const Mask low = pick & (~pick + 1);
      const Mask ripple = pick + low;
      pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

bool brute_force_k_in_a_tree(const Graph& g, std::span<const Vertex> terminals, int max_n) {
  return brute_force_find_tree(g, terminals, max_n).has_value();
}

// ---------------------------------------------------------------- generators

std::string_view to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::MinimalKStructure: return "minimal-k-structure";
    case InstanceKind::SubdividedK4: return "subdivided-k4";
    case InstanceKind::Spider: return "spider";
    case InstanceKind::RandomGirth: return "random-girth";
  }
  return "unknown";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  for (InstanceKind kind : {InstanceKind::MinimalKStructure, InstanceKind::SubdividedK4,
                            InstanceKind::Spider, InstanceKind::RandomGirth}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

Instance generate(const InstanceSpec& spec) {
  if (spec.kind != InstanceKind::SubdividedK4 && spec.k < 3) infeasible("k must be at least 3");
  switch (spec.kind) {
    case InstanceKind::MinimalKStructure: return minimal_k_structure(spec);
    case InstanceKind::SubdividedK4: return subdivided_k4(spec);
    case InstanceKind::Spider: return spider(spec);
    case InstanceKind::RandomGirth: return random_girth(spec);
  }
  infeasible("unknown instance kind");
}

Instance add_noise(const Instance& base, const NoiseSpec& noise) {
  Adjacency adj = thaw(base.graph);
  VertexMask terminal(adj.size(), 0);
  for (Vertex t : base.terminals) terminal[at(t)] = 1;

  std::vector<Vertex> pool;
  if (noise.anchors.empty()) {
    for (size_t u = 0; u < adj.size(); ++u) {
      if (!terminal[u]) pool.push_back(static_cast<Vertex>(u));
    }
  } else {
    for (Vertex a : noise.anchors) {
      if (!base.graph.contains(a)) infeasible("anchor out of range");
      if (!terminal[at(a)]) pool.push_back(a);
    }
  }
  if (pool.empty()) infeasible("no vertex may receive noise");

  Draw draw(noise.seed);
  for (int i = 0; i < noise.extra_vertices; ++i) {
    pool.push_back(hang_path(adj, pool[draw.below(pool.size())], 1));
  }
  for (int i = 0; i < noise.extra_edges; ++i) {
    const Vertex u = pool[draw.below(pool.size())];
    const Vertex v = pool[draw.below(pool.size())];
    if (u == v || has_edge(adj, u, v)) continue;
    if (within(adj, u, v, noise.girth_bound - 2)) continue;
    add_edge(adj, u, v);
  }
  return Instance{freeze(adj), base.terminals};
}

Instance planted_k_structure(int k, int n, std::uint64_t seed) {
  if (k < 3) infeasible("k must be at least 3");
  if (n < 3 * k) infeasible("planted k-structure needs n >= 3k");
  InstanceSpec spec;
  spec.kind = InstanceKind::MinimalKStructure;
  spec.k = k;
  spec.path_lengths.assign(static_cast<size_t>(k), 2);
  Instance inst = generate(spec);
  const int extra = n - 3 * k;
  for (int i = 0; i < k; ++i) {
    // P_i \ {x_i} is {s_i, s'_i}; s'_i = k + 2i by construction.
    NoiseSpec noise;
    noise.extra_vertices = extra / k + (i < extra % k ? 1 : 0);
    noise.extra_edges = noise.extra_vertices / 2;
    noise.girth_bound = k;
    noise.seed = seed * 1000003u + static_cast<std::uint64_t>(i);
    noise.anchors = {i, k + 2 * i};
    inst = add_noise(inst, noise);
  }
  return inst;
}

Instance relabel(const Instance& base, std::span<const Vertex> perm) {
  const size_t n = base.graph.vertex_count();
  if (perm.size() != n) throw Error(ErrorCode::PreconditionViolated, "permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : base.graph.edges()) edges.emplace_back(perm[at(u)], perm[at(v)]);
  Instance out{Graph(n, edges), {}};
  for (Vertex t : base.terminals) out.terminals.push_back(perm[at(t)]);
  return out;
}

}  // namespace kintree
