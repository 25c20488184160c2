#include <doctest.h>

#include <random>

#include <kintree/oracle.hpp>
#include <kintree/solver.hpp>

#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace kintree;

namespace {

constexpr int kCap = 24;

// Vertex of P_i at distance d from s_i.
Vertex from_s(const KStructure& ks, int i, int d) {
  const Path& p = ks.paths[static_cast<std::size_t>(i)];
  return p[p.size() - 1 - static_cast<std::size_t>(d)];
}

Vertex from_s(const K4Structure& k4, int i, int j, int d) {
  const Path& p = k4.path(i, j);
  return p[p.size() - 1 - static_cast<std::size_t>(d)];
}

Vertex last_vertex(const Graph& g) { return static_cast<Vertex>(g.vertex_count() - 1); }

template <class T>
void check_error(ErrorCode code, T&& call) {
  try {
    call();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// Absorbing into `ks` must end in a tree via case `expected`, and the full
// solver must agree with exhaustive search.
void expect_k_case(const Graph& g, const KStructure& ks, AbsorbCase expected) {
  CAPTURE(to_string(expected));
  REQUIRE(girth(g).at_least(ks.k()));
  REQUIRE(verify_k_structure(g, ks));
  Diagnostics diag;
  const KAbsorbOutcome out = absorb_into_k_structure(g, ks, {true, &diag});
  REQUIRE(std::holds_alternative<InducedTree>(out));
  const auto& tree = std::get<InducedTree>(out);
  CHECK(verify_induced_tree(g, tree));
  CHECK(tree.terminals == ks.terminals());
  CHECK(diag.hits(expected) == 1);
  CHECK(brute_force_k_in_a_tree(g, ks.terminals(), kCap));

  const SolveResult full = k_in_a_tree(g, ks.k(), ks.terminals(), {true, nullptr});
  CHECK(std::holds_alternative<InducedTree>(full));
  CHECK(verify_result(g, ks.terminals(), full));
}

void expect_k4_case(const Graph& g, const K4Structure& k4, AbsorbCase expected) {
  CAPTURE(to_string(expected));
  REQUIRE(girth(g).at_least(6));
  REQUIRE(verify_k4_structure(g, k4));
  Diagnostics diag;
  const K4AbsorbOutcome out = absorb_into_k4_structure(g, k4, {true, &diag});
  REQUIRE(std::holds_alternative<InducedTree>(out));
  const auto& tree = std::get<InducedTree>(out);
  CHECK(verify_induced_tree(g, tree));
  CHECK(tree.terminals == k4.terminals());
  CHECK(diag.hits(expected) == 1);
  CHECK(brute_force_k_in_a_tree(g, k4.terminals(), kCap));
}

}  // namespace

TEST_SUITE("solver") {

// ----------------------------------------------------------------- growth

TEST_CASE("growing over a spider yields the spider") {
  InstanceSpec spec;
  spec.kind = InstanceKind::Spider;
  spec.k = 6;
  spec.path_lengths = {1, 2, 3, 1, 2, 3};
  const Instance inst = generate(spec);
  const GrowOutcome out = grow_initial_tree(inst.graph, 6, inst.terminals);
  REQUIRE(std::holds_alternative<InducedTree>(out));
  const auto& t = std::get<InducedTree>(out);
  CHECK(t.vertices.size() == inst.graph.vertex_count());
  CHECK(t.terminals == inst.terminals);
}

TEST_CASE("growing over the minimal 7-structure meets the structure") {
  const auto [inst, ks] = fixtures::minimal_k_structure(7);
  const GrowOutcome out = grow_initial_tree(inst.graph, 7, inst.terminals);
  REQUIRE(std::holds_alternative<KStructure>(out));
  const auto& found = std::get<KStructure>(out);
  CHECK(verify_k_structure(inst.graph, found));
  CHECK(found.terminals().back() == inst.terminals.back());
  CHECK(VertexSet(found.vertices()).size() == inst.graph.vertex_count());
}

TEST_CASE("a six-cycle with six pendants is a 6-structure") {
  std::vector<Edge> e;
  for (int i = 0; i < 6; ++i) {
    e.emplace_back(i, (i + 1) % 6);
    e.emplace_back(i, 6 + i);
  }
  const Graph g(12, e);
  const std::vector<Vertex> x{6, 7, 8, 9, 10, 11};
  Diagnostics diag;
  const GrowOutcome out = grow_initial_tree(g, 6, x, {false, &diag});
  REQUIRE(std::holds_alternative<KStructure>(out));
  CHECK(verify_k_decomposition(g, std::get<KStructure>(out)));
  CHECK(diag.link.structure == 1);
}

TEST_CASE("grow_initial_tree preconditions") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5);
  const std::vector<Vertex> x = inst.terminals;
  check_error(ErrorCode::TerminalCountMismatch, [&] { (void)grow_initial_tree(inst.graph, 6, x); });
  const std::vector<Vertex> inner{0, 6, 7, 8, 9};
  check_error(ErrorCode::PreconditionViolated, [&] { (void)grow_initial_tree(inst.graph, 5, inner); });
  const std::vector<Vertex> twice{5, 5, 7, 8, 9};
  check_error(ErrorCode::DuplicateTerminals, [&] { (void)grow_initial_tree(inst.graph, 5, twice); });
  const Graph chord = fixtures::with_edges(inst.graph, {{0, 2}});
  check_error(ErrorCode::GirthTooSmall, [&] { (void)grow_initial_tree(chord, 5, x); });
  const Graph apart(4, {{0, 1}, {2, 3}});
  const std::vector<Vertex> ends{0, 1, 2, 3};
  check_error(ErrorCode::Disconnected, [&] { (void)grow_initial_tree(apart, 4, ends); });
}

// ------------------------------------------------------- k-structure cases

TEST_CASE("a structure that already decomposes is returned unchanged") {
  const auto [inst, ks] = fixtures::minimal_k_structure(6, {2, 1, 3, 1, 2, 1});
  const KAbsorbOutcome out = absorb_into_k_structure(inst.graph, ks);
  REQUIRE(std::holds_alternative<KStructure>(out));
  CHECK(std::get<KStructure>(out) == ks);

  // extra vertices that keep the decomposition are absorbed silently
  Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 2, 2)});
  g = fixtures::with_vertex(g, {last_vertex(g)});
  REQUIRE(girth(g).at_least(6));
  Diagnostics diag;
  const KAbsorbOutcome again = absorb_into_k_structure(g, ks, {true, &diag});
  CHECK(std::holds_alternative<KStructure>(again));
  CHECK(diag.absorbed_vertices == 2);
  CHECK_FALSE(brute_force_k_in_a_tree(g, ks.terminals(), kCap));
}

TEST_CASE("absorption requires a valid structure") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5);
  KStructure bad = ks;
  std::swap(bad.paths[0], bad.paths[2]);
  check_error(ErrorCode::InvalidStructure, [&] { (void)absorb_into_k_structure(inst.graph, bad); });
  const Graph c4(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const KStructure four{{{4, 0}, {5, 1}, {6, 2}, {7, 3}}};
  check_error(ErrorCode::PreconditionViolated, [&] { (void)absorb_into_k_structure(c4, four); });
}

TEST_CASE("case: the linker finds a tree") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {2, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 1), from_s(ks, 2, 1)});
  expect_k_case(g, ks, AbsorbCase::KLinkedTree);
}

TEST_CASE("case: w sees s_2 and s'_{k-1}") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {3, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 2), from_s(ks, 1, 0), from_s(ks, 3, 1)});
  expect_k_case(g, ks, AbsorbCase::KNearSide);
}

TEST_CASE("case: w sees s'_3 and s_k, the mirror image") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {3, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 2), from_s(ks, 2, 1), from_s(ks, 4, 0)});
  expect_k_case(g, ks, AbsorbCase::KNearSide);
}

TEST_CASE("case: w sees s'_3 and s'_{k-1} but not P_1") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {3, 2, 2, 2, 2});
  Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 2)});  // t, absorbed first
  g = fixtures::with_vertex(g, {last_vertex(g), from_s(ks, 2, 1), from_s(ks, 3, 1)});
  expect_k_case(g, ks, AbsorbCase::KFarNoP1);
}

TEST_CASE("case: w meets P_1 far from s_1") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {3, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 2), from_s(ks, 2, 1), from_s(ks, 3, 1)});
  expect_k_case(g, ks, AbsorbCase::KFarDeepP1);
}

TEST_CASE("case: w meets P_1 far from s_1 and also sees s_1") {
  // keeping s_1 here is what lets P_k reach the rest of the tree
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {4, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(
      inst.graph, {from_s(ks, 0, 3), from_s(ks, 0, 0), from_s(ks, 2, 1), from_s(ks, 3, 1)});
  expect_k_case(g, ks, AbsorbCase::KFarDeepP1WithS1);
}

TEST_CASE("case: w sees s_1 on P_1") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {3, 2, 2, 2, 2});
  Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 2)});
  g = fixtures::with_vertex(g, {last_vertex(g), from_s(ks, 0, 0), from_s(ks, 2, 1), from_s(ks, 3, 1)});
  expect_k_case(g, ks, AbsorbCase::KFarS1);
}

TEST_CASE("case: w sees s'_1 with k = 5") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5, {2, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 1), from_s(ks, 2, 1), from_s(ks, 3, 1)});
  expect_k_case(g, ks, AbsorbCase::KFarInnerS1);
}

TEST_CASE("case: k = 7 with w on s'_3, s'_{k-1} and deep in P_1") {
  const auto [inst, ks] = fixtures::minimal_k_structure(7, {3, 2, 2, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 2), from_s(ks, 2, 1), from_s(ks, 5, 1)});
  expect_k_case(g, ks, AbsorbCase::KFarDeepP1);
}

TEST_CASE("a failure at a later index is rotated to s_1") {
  // the far pattern around s_2: w meets P_2 deep and s'_4, s'_7, so the
  // first cut to fail is the one at s_2
  const auto [inst, ks] = fixtures::minimal_k_structure(7, {2, 4, 2, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 1, 3), from_s(ks, 3, 1), from_s(ks, 6, 1)});
  REQUIRE(verify_k_decomposition(g, ks).index == 1);
  expect_k_case(g, ks, AbsorbCase::KFarDeepP1);
}

TEST_CASE("case: k = 6 escalates to the canonical K4 instance") {
  const auto [inst, ks] = fixtures::minimal_k_structure(6, {2, 1, 2, 1, 2, 1});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 1), from_s(ks, 2, 1), from_s(ks, 4, 1)});
  REQUIRE(girth(g).value() == 6);
  const Vertex w = last_vertex(g);

  Diagnostics diag;
  const KAbsorbOutcome out = absorb_into_k_structure(g, ks, {true, &diag});
  REQUIRE(std::holds_alternative<EscalateK4>(out));
  const auto& up = std::get<EscalateK4>(out);
  CHECK(diag.hits(AbsorbCase::KEscalate) == 1);
  CHECK(up.apex == w);
  CHECK(up.rotation == 0);
  CHECK_FALSE(up.reflected);
  CHECK(up.source == ks);

  // a = w, b = s_1, c = s_3, d = s_5; s_ab = s'_1, s_ac = s'_3, s_ad = s'_5,
  // s_bc = s_2, s_bd = s_6, s_cd = s_4
  auto trimmed = [&](int i) {
    Path p = ks.paths[static_cast<std::size_t>(i)];
    p.pop_back();
    return p;
  };
  K4Structure expected;
  expected.branch = {w, ks.cycle_vertex(0), ks.cycle_vertex(2), ks.cycle_vertex(4)};
  expected.paths = {trimmed(0), trimmed(2), trimmed(4), ks.paths[1], ks.paths[5], ks.paths[3]};
  CHECK(up.structure == expected);
  CHECK(verify_k4_structure(g, up.structure));
  CHECK(verify_k4_decomposition(g, up.structure));
  CHECK(up.structure.subdivision(kA, kB) == ks.inner(0));

  CHECK_FALSE(brute_force_k_in_a_tree(g, ks.terminals(), kCap));
  const SolveResult full = k_in_a_tree(g, 6, ks.terminals(), {true, nullptr});
  CHECK(std::holds_alternative<K4Structure>(full));
  CHECK(verify_result(g, ks.terminals(), full));
}

TEST_CASE("escalation after a reflection records it") {
  const auto [inst, ks] = fixtures::minimal_k_structure(6, {2, 1, 2, 1, 2, 1});
  // failure at s_3: rotate by two, then the far pair is found mirrored or not
  Diagnostics diag;
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 1), from_s(ks, 2, 1), from_s(ks, 4, 1)});
  const KAbsorbOutcome out = absorb_into_k_structure(g, ks.rotated(2), {true, &diag});
  REQUIRE(std::holds_alternative<EscalateK4>(out));
  const auto& up = std::get<EscalateK4>(out);
  CHECK(verify_k4_structure(g, up.structure));
  CHECK(up.structure.corner(kA) == last_vertex(g));
  KStructure normalized = ks.rotated(2).rotated(up.rotation);
  if (up.reflected) normalized = normalized.reflected();
  CHECK(up.source == normalized);
}

// ------------------------------------------------------ K4-structure cases

TEST_CASE("the canonical K4 instance absorbs to itself") {
  for (const std::vector<int>& lengths : {std::vector<int>{}, std::vector<int>{2, 2, 2, 2, 2, 2}}) {
    const auto [inst, k4] = fixtures::subdivided_k4(lengths);
    const K4AbsorbOutcome out = absorb_into_k4_structure(inst.graph, k4, {true, nullptr});
    REQUIRE(std::holds_alternative<K4Structure>(out));
    CHECK(std::get<K4Structure>(out) == k4);
  }
}

TEST_CASE("K4 case: the linker finds a tree") {
  const auto [inst, k4] = fixtures::subdivided_k4({2, 1, 1, 1, 1, 1});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(k4, kA, kB, 1), from_s(k4, kC, kD, 0)});
  expect_k4_case(g, k4, AbsorbCase::K4LinkedTree);
}

TEST_CASE("K4 case: w sees s_bc and s_ad") {
  const auto [inst, k4] = fixtures::subdivided_k4({3, 1, 1, 1, 1, 1});
  const Graph g = fixtures::with_vertex(
      inst.graph, {from_s(k4, kA, kB, 2), from_s(k4, kB, kC, 0), from_s(k4, kA, kD, 0)});
  expect_k4_case(g, k4, AbsorbCase::K4PairTree);
}

TEST_CASE("K4 case: w sees s_ac and s_bd") {
  const auto [inst, k4] = fixtures::subdivided_k4({3, 1, 1, 1, 1, 1});
  const Graph g = fixtures::with_vertex(
      inst.graph, {from_s(k4, kA, kB, 2), from_s(k4, kA, kC, 0), from_s(k4, kB, kD, 0)});
  expect_k4_case(g, k4, AbsorbCase::K4PairTree);
}

TEST_CASE("K4 case: s_ab fails to cut") {
  const auto [inst, k4] = fixtures::subdivided_k4({4, 1, 1, 1, 1, 1});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(k4, kA, kB, 3), k4.corner(kA)});
  expect_k4_case(g, k4, AbsorbCase::K4SingleTree);

  const Graph other = fixtures::with_vertex(inst.graph, {from_s(k4, kA, kB, 3), k4.corner(kB)});
  expect_k4_case(other, k4, AbsorbCase::K4SingleTree);
}

TEST_CASE("K4: a vertex on the interiors of P_ab and P_cd gives a tree") {
  const auto [inst, k4] = fixtures::subdivided_k4({2, 1, 1, 1, 1, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(k4, kA, kB, 1), from_s(k4, kC, kD, 1)});
  REQUIRE(girth(g).at_least(6));
  const K4AbsorbOutcome out = absorb_into_k4_structure(g, k4, {true, nullptr});
  REQUIRE(std::holds_alternative<InducedTree>(out));
  CHECK(verify_induced_tree(g, std::get<InducedTree>(out)));
  CHECK(brute_force_k_in_a_tree(g, k4.terminals(), kCap));
}

TEST_CASE("K4 absorption requires a valid structure") {
  const auto [inst, k4] = fixtures::subdivided_k4();
  K4Structure bad = k4;
  std::swap(bad.paths[0], bad.paths[5]);
  check_error(ErrorCode::InvalidStructure, [&] { (void)absorb_into_k4_structure(inst.graph, bad); });
}

// ------------------------------------------------------------ full solver

TEST_CASE("k_in_a_tree errors") {
  const auto [inst, ks] = fixtures::minimal_k_structure(5);
  const Graph& g = inst.graph;
  const std::vector<Vertex> x = inst.terminals;
  check_error(ErrorCode::UnsupportedK, [&] { (void)k_in_a_tree(g, 4, std::vector<Vertex>{5, 6, 7, 8}); });
  check_error(ErrorCode::TerminalCountMismatch, [&] { (void)k_in_a_tree(g, 6, x); });
  check_error(ErrorCode::DuplicateTerminals, [&] { (void)k_in_a_tree(g, 5, std::vector<Vertex>{5, 6, 7, 8, 5}); });
  check_error(ErrorCode::PreconditionViolated, [&] { (void)k_in_a_tree(g, 5, std::vector<Vertex>{5, 6, 7, 8, 99}); });
  const Graph chord = fixtures::with_edges(g, {{0, 2}});
  check_error(ErrorCode::GirthTooSmall, [&] { (void)k_in_a_tree(chord, 5, x); });
}

TEST_CASE("terminals in several components give a partition") {
  // two disjoint spiders, terminals interleaved
  std::vector<Edge> e;
  for (int c = 0; c < 2; ++c) {
    const int base = 5 * c;
    for (int leg = 1; leg < 5; ++leg) e.emplace_back(base, base + leg);
  }
  const Graph g(10, e);
  const std::vector<Vertex> x{1, 6, 2, 7, 3};
  const SolveResult r = k_in_a_tree(g, 5, x);
  REQUIRE(std::holds_alternative<Disconnected>(r));
  const auto& parts = std::get<Disconnected>(r).components;
  CHECK(parts == std::vector<std::vector<Vertex>>{{1, 2, 3}, {6, 7}});
  CHECK(verify_result(g, x, r));

  CHECK_FALSE(verify_result(g, x, Disconnected{{{1, 2}, {6, 7, 3}}}));
  CHECK(verify_result(g, x, Disconnected{{{1, 2, 3, 6, 7}}}).reason == VerifyFailure::WrongArity);
  CHECK(verify_result(g, x, Disconnected{{{1, 2}, {6, 7}}}).reason == VerifyFailure::MissingTerminal);
}

TEST_CASE("non-pendant terminals on a five-cycle") {
  const Graph c5 = fixtures::cycle(5);
  const std::vector<Vertex> x{0, 1, 2, 3, 4};
  const SolveResult r = k_in_a_tree(c5, 5, x, {true, nullptr});
  REQUIRE(std::holds_alternative<KStructure>(r));
  const auto& ks = std::get<KStructure>(r);
  for (int i = 0; i < 5; ++i) CHECK(ks.paths[static_cast<std::size_t>(i)].size() == 1);
  CHECK(verify_result(c5, x, r));
  CHECK_FALSE(brute_force_k_in_a_tree(c5, x));
}

TEST_CASE("tree answers list the terminals in request order") {
  const Graph g = fixtures::path(9);
  const std::vector<Vertex> x{8, 0, 4, 2, 6};
  const SolveResult r = k_in_a_tree(g, 5, x);
  REQUIRE(std::holds_alternative<InducedTree>(r));
  CHECK(std::get<InducedTree>(r).terminals == x);
  CHECK(std::get<InducedTree>(r).vertices.size() == 9);
  CHECK(verify_result(g, x, r));
}

TEST_CASE("verify_result rejects doctored answers") {
  const Graph c5 = fixtures::cycle(5);
  const std::vector<Vertex> x{0, 1, 2, 3, 4};
  CHECK(verify_result(c5, x, InducedTree{VertexSet{0, 1, 2, 3, 4}, x}).reason == VerifyFailure::HasCycle);

  const auto [inst, ks] = fixtures::minimal_k_structure(5, {3, 2, 2, 2, 2});
  const Graph g = fixtures::with_vertex(inst.graph, {from_s(ks, 0, 2), from_s(ks, 2, 1), from_s(ks, 3, 1)});
  CHECK(verify_result(g, ks.terminals(), ks).reason == VerifyFailure::NotSeparated);
  CHECK(verify_result(inst.graph, ks.terminals(), ks));
  // terminal order is immaterial to the certificate
  CHECK(verify_result(inst.graph, ks.terminals(), ks.rotated(1)));
  KStructure foreign = ks;
  foreign.paths[0].front() = foreign.paths[0][1];
  CHECK_FALSE(verify_result(inst.graph, ks.terminals(), foreign));
}

TEST_CASE("Petersen graph: every 5-set of vertices agrees with the oracle") {
  const Graph g = fixtures::petersen();
  int agree = 0;
  for (int mask = 0; mask < (1 << 10); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 5) continue;
    std::vector<Vertex> x;
    for (Vertex v = 0; v < 10; ++v) {
      if (mask & (1 << v)) x.push_back(v);
    }
    const SolveResult r = k_in_a_tree(g, 5, x, {true, nullptr});
    CHECK(verify_result(g, x, r));
    const bool tree = std::holds_alternative<InducedTree>(r);
    CHECK(tree == ref::has_covering_tree(g, x));
    agree += tree == ref::has_covering_tree(g, x);
  }
  CHECK(agree == 252);
}

TEST_CASE("random instances with arbitrary terminals agree with the oracle") {
  std::mt19937_64 rng(99);
  int trees = 0;
  int certificates = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int k = 5 + static_cast<int>(seed % 3);
    Instance inst;
    std::vector<Vertex> x;
    if (seed % 2 == 0) {
      InstanceSpec spec;
      spec.kind = InstanceKind::RandomGirth;
      spec.k = k;
      spec.n = 12 + static_cast<int>(seed % 5);
      spec.seed = seed;
      spec.edge_probability = 0.3 + 0.1 * static_cast<double>(seed % 3);
      inst = generate(spec);
      std::vector<Vertex> all(inst.graph.vertex_count());
      for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
      std::shuffle(all.begin(), all.end(), rng);
      x.assign(all.begin(), all.begin() + k);
    } else {
      // a noisy structure whose terminals sit anywhere on P_i \ {s_i}
      const auto [base, ks] = fixtures::minimal_k_structure(k, std::vector<int>(static_cast<std::size_t>(k), 2));
      NoiseSpec noise;
      noise.extra_vertices = static_cast<int>(rng() % 4);
      noise.extra_edges = static_cast<int>(rng() % 3);
      noise.girth_bound = k;
      noise.seed = seed;
      inst = add_noise(base, noise);
      for (const Path& p : ks.paths) x.push_back(p[rng() % 2]);
    }

    const SolveResult r = k_in_a_tree(inst.graph, k, x, {true, nullptr});
    CHECK(verify_result(inst.graph, x, r));
    const bool tree = std::holds_alternative<InducedTree>(r);
    if (std::holds_alternative<Disconnected>(r)) continue;
    CHECK(tree == brute_force_k_in_a_tree(inst.graph, x, kCap));
    tree ? ++trees : ++certificates;
  }
  CHECK(trees > 50);
  CHECK(certificates > 50);
}

TEST_CASE("answers are deterministic and survive relabelling") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    InstanceSpec spec;
    spec.kind = InstanceKind::RandomGirth;
    spec.n = 14;
    spec.seed = seed;
    const Instance inst = generate(spec);
    const SolveResult first = k_in_a_tree(inst.graph, 5, inst.terminals);
    CHECK(k_in_a_tree(inst.graph, 5, inst.terminals) == first);

    std::vector<Vertex> perm(inst.graph.vertex_count());
    for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<Vertex>(perm.size() - 1 - v);
    const Instance flipped = relabel(inst, perm);
    const SolveResult other = k_in_a_tree(flipped.graph, 5, flipped.terminals);
    CHECK(other.index() == first.index());
    CHECK(verify_result(flipped.graph, flipped.terminals, other));
  }
}

}  // TEST_SUITE
