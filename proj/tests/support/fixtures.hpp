#pragma once

#include <vector>

#include <kintree/certificates.hpp>
#include <kintree/oracle.hpp>

namespace fixtures {

using namespace kintree;

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<std::size_t>(n), e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n), e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer
    e.emplace_back(i, i + 5);                // spoke
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

inline std::vector<int> lengths_or_ones(std::vector<int> lengths, std::size_t count) {
  if (lengths.empty()) lengths.assign(count, 1);
  return lengths;
}

/// The generator's minimal k-structure together with its own certificate.
inline std::pair<Instance, KStructure> minimal_k_structure(int k, std::vector<int> lengths = {}) {
  lengths = lengths_or_ones(lengths, static_cast<std::size_t>(k));
  InstanceSpec spec;
  spec.kind = InstanceKind::MinimalKStructure;
  spec.k = k;
  spec.path_lengths = lengths;
  Instance inst = generate(spec);
  KStructure ks;
  Vertex next = k;
  for (int i = 0; i < k; ++i) {
    Path p{i};
    for (int j = 0; j < lengths[static_cast<std::size_t>(i)]; ++j) p.push_back(next++);
    ks.paths.emplace_back(p.rbegin(), p.rend());
  }
  return {inst, ks};
}

/// The subdivided K4 with pendant paths, and its own certificate.
inline std::pair<Instance, K4Structure> subdivided_k4(std::vector<int> lengths = {}) {
  lengths = lengths_or_ones(lengths, 6);
  InstanceSpec spec;
  spec.kind = InstanceKind::SubdividedK4;
  spec.path_lengths = lengths;
  Instance inst = generate(spec);
  K4Structure k4;
  k4.branch = {0, 1, 2, 3};
  Vertex next = 10;
  for (int p = 0; p < 6; ++p) {
    Path path{4 + p};
    for (int j = 0; j < lengths[static_cast<std::size_t>(p)]; ++j) path.push_back(next++);
    k4.paths[static_cast<std::size_t>(p)] = Path(path.rbegin(), path.rend());
  }
  return {inst, k4};
}

/// g plus one new vertex adjacent to `nbrs`.
inline Graph with_vertex(const Graph& g, const std::vector<Vertex>& nbrs) {
  std::vector<Edge> e = g.edges();
  const auto w = static_cast<Vertex>(g.vertex_count());
  for (Vertex u : nbrs) e.emplace_back(u, w);
  return Graph(g.vertex_count() + 1, e);
}

inline Graph with_edges(const Graph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> e = g.edges();
  e.insert(e.end(), extra.begin(), extra.end());
  return Graph(g.vertex_count(), e);
}

}  // namespace fixtures
