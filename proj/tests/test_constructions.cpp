#include "doctest.h"
#include "oracles.hpp"

#include "zol/canonical.hpp"
#include "zol/constructions.hpp"
#include "zol/errors.hpp"
#include "zol/pair_calculus.hpp"
#include "zol/random_graph.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <random>

using namespace zol;

namespace {

std::vector<Edge> completeOn(int n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return es;
}

struct Row {
  int v;
  int e;
  Rational f;
};

// v(G,H), e(G,H) and f at alpha = 1/(k-2), counted by hand from the
// displayed vertex and edge lists:
//   G1 over complete H1: 3, 3k-6;  G1 over edgeless H1: 3, C(k,2)
//   G2: 1, k-2;   G3 with t indices: 1+t, (1+t)(k-2)
//   G4: 3, (k-4)+2(k-3)+3;  G4^1: 4, that +(k-3)+2;  G4^2: 5, that +2(k-3)+3
const std::map<std::string, std::map<int, Row>> kTable = {
    {"g1_full", {{4, {3, 6, 0}}, {5, {3, 9, 0}}, {6, {3, 12, 0}}}},
    {"g1_empty", {{4, {3, 6, 0}}, {5, {3, 10, Rational(-1, 3)}}, {6, {3, 15, Rational(-3, 4)}}}},
    {"g2", {{4, {1, 2, 0}}, {5, {1, 3, 0}}, {6, {1, 4, 0}}}},
    {"g3_1", {{4, {2, 4, 0}}, {5, {2, 6, 0}}, {6, {2, 8, 0}}}},
    {"g3_all", {{4, {3, 6, 0}}, {5, {4, 12, 0}}, {6, {5, 20, 0}}}},
    {"g4", {{4, {3, 5, Rational(1, 2)}}, {5, {3, 8, Rational(1, 3)}}, {6, {3, 11, Rational(1, 4)}}}},
    {"g4v1", {{4, {4, 8, 0}}, {5, {4, 12, 0}}, {6, {4, 16, 0}}}},
    {"g4v2", {{4, {5, 10, 0}}, {5, {5, 15, 0}}, {6, {5, 20, 0}}}},
};

RootedPair build(const std::string& name, int k) {
  std::vector<int> all(static_cast<std::size_t>(k - 2));
  std::iota(all.begin(), all.end(), 1);
  if (name == "g1_full") return buildG1H1(k, completeOn(k - 3));
  if (name == "g1_empty") return buildG1H1(k);
  if (name == "g2") return buildG2H2(k);
  if (name == "g3_1") return buildG3(k, {1});
  if (name == "g3_all") return buildG3(k, all);
  if (name == "g4") return buildG4(k);
  if (name == "g4v1") return buildG4v1(k);
  return buildG4v2(k);
}

Graph randomGraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

bool connected(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<Vertex> seen{s.front()};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (Vertex v : s)
      if (g.adjacent(seen[i], v) && std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  return seen.size() == s.size();
}

CanonicalForm rootedForm(const ClosureResult& r, int rootCount) {
  std::vector<int> colors(r.vertices.size(), 0);
  for (int i = 0; i < rootCount; ++i) colors[i] = i + 1;
  return canonicalForm(r.graph, colors);
}

}  // namespace

TEST_CASE("construction f-table at alpha = 1/(k-2)") {
  for (const auto& [name, rows] : kTable)
    for (const auto& [k, row] : rows) {
      CAPTURE(name);
      CAPTURE(k);
      const RootedPair p = build(name, k);
      CHECK(p.addedCount() == row.v);
      CHECK(p.newEdgeCount() == row.e);
      CHECK(fValue(p, Rational(1, k - 2)) == row.f);
    }
}

TEST_CASE("construction vertex and edge lists") {
  const RootedPair g2 = buildG2H2(4);
  CHECK(g2.rootCount() == 2);
  CHECK(g2.newEdges() == std::vector<Edge>{Edge(0, 2), Edge(1, 2)});

  // k=4, G3^{1}: x_4^{1} has label 3 and misses x_1.
  const RootedPair g3 = buildG3(4, {1});
  CHECK(g3.vertexCount() == 4);
  CHECK_FALSE(g3.graph().adjacent(0, 3));
  CHECK(g3.graph().adjacent(1, 3));
  CHECK(g3.graph().adjacent(2, 3));

  // k=4: x_{k+1} (label 1) only meets x_{k+2}, x_{k+3}.
  const RootedPair g4 = buildG4(4);
  CHECK(g4.rootCount() == 1);
  CHECK(g4.graph().neighbors(1).size() == 2);
  CHECK(g4.graph().adjacent(1, 2));
  CHECK(g4.graph().adjacent(1, 3));
  CHECK(g4.graph().adjacent(0, 2));

  const RootedPair g4v1 = buildG4v1(5);
  CHECK(g4v1.graph().adjacent(5, 2));  // x_{k+1}
  CHECK(g4v1.graph().adjacent(5, 4));  // x_{k+3}
  CHECK_FALSE(g4v1.graph().adjacent(5, 3));

  const RootedPair g4v2 = buildG4v2(5);
  CHECK(g4v2.graph().adjacent(5, 6));
  CHECK(g4v2.graph().adjacent(2, 6));
  CHECK_FALSE(g4v2.graph().adjacent(3, 6));

  // G3(U): one apex per member, joined to its k-2 vertices.
  const RootedPair u = buildG3U(4, {1}, {{0, 3}, {1, 2}});
  CHECK(u.vertexCount() == 6);
  CHECK(u.graph().adjacent(4, 0));
  CHECK(u.graph().adjacent(4, 3));
  CHECK(u.graph().degree(5) == 2);
  CHECK(fValue(u, Rational(1, 2)) == Rational(0));

  CHECK_THROWS_AS(buildG2H2(3), ArgumentError);
  CHECK_THROWS_AS(buildG3(4, {}), ArgumentError);
  CHECK_THROWS_AS(buildG3(4, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(buildG3(4, {3}), ArgumentError);
  CHECK_THROWS_AS(buildG3U(4, {1}, {{0, 0}}), ArgumentError);
  CHECK_THROWS_AS(buildG3U(4, {1}, {{0, 9}}), ArgumentError);
  CHECK_THROWS_AS(buildG1H1(5, {Edge(0, 2)}), ArgumentError);
}

TEST_CASE("G2 is neutral and G3 is a neutral chain over H2") {
  for (int k = 4; k <= 6; ++k) {
    const Rational alpha(1, k - 2);
    CHECK(classifyPair(buildG2H2(k), alpha).neutral);
    // x_{k-1} lies strictly between H2 and G3 with f = 0.
    CHECK_FALSE(classifyPair(buildG3(k, {1}), alpha).neutral);
    const RootedPair g3 = buildG3(k, {2, 1});
    CHECK(isNeutralChain(g3.graph(), g3.rootMask(), alpha));
  }
}

TEST_CASE("dense subgraph scan") {
  CHECK(scanDense(Graph::complete(5), 6, Rational(2)).empty());
  CHECK_FALSE(scanDense(Graph::complete(6), 7, Rational(2)).empty());
  CHECK_THROWS_AS(scanDense(Graph::complete(6), scanCeiling() + 1, Rational(2)), RefusalError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = randomGraph(rng, n, 0.5);
    const int maxV = 2 + static_cast<int>(rng() % 5);
    const Rational thr = trial % 2 ? Rational(1) : Rational(3, 2);
    std::vector<std::vector<Vertex>> want;
    bool anyViolation = false;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      const auto s = oracle::members(m);
      if (static_cast<int>(s.size()) >= maxV) continue;
      if (Rational(oracle::edgesInside(g, s), static_cast<std::int64_t>(s.size())) <= thr) continue;
      anyViolation = true;
      if (connected(g, s)) want.push_back(s);
    }
    std::sort(want.begin(), want.end());
    const auto got = scanDense(g, maxV, thr);
    CHECK(got == want);
    CHECK(got.empty() == !anyViolation);
  }
}

TEST_CASE("sparse random hosts pass the guard") {
  int clean = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Graph host = sampleGraph(60, std::pow(60.0, -0.5), i, 77).toDense();
    clean += scanDense(host, 6, Rational(2)).empty() ? 1 : 0;
  }
  CHECK(clean >= 95);
}

TEST_CASE("closure examples") {
  const Graph tri = Graph::complete(3);
  const std::vector<Vertex> emb{0, 1, 2};
  const Graph lonely(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  const ClosureResult none = closure(tri, lonely, emb, 4);
  CHECK(none.vertices == emb);
  CHECK(none.graph == tri);
  CHECK(none.added.empty());

  const Graph withQ(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 3)});
  const ClosureResult r = closure(tri, withQ, emb, 4);
  CHECK(r.vertices == std::vector<Vertex>{0, 1, 2, 3});
  REQUIRE(r.added.size() == 1);
  CHECK(r.added[0].step == 3);
  CHECK(r.added[0].subset == std::vector<Vertex>{0, 1});
  CHECK(r.added[0].w == std::vector<Vertex>{3});
  CHECK(r.graph == withQ);

  // v(A) < k-2: nothing to close over.
  const std::vector<Vertex> one{0};
  CHECK(closure(Graph(1), withQ, one, 5).vertices == one);

  const std::vector<Vertex> wrong{0, 2, 3};
  CHECK_THROWS_AS(closure(tri, withQ, wrong, 4), ArgumentError);
  CHECK_THROWS_AS(closure(tri, withQ, emb, 3), ArgumentError);
  const std::vector<Vertex> shortEmb{0, 1};
  CHECK_THROWS_AS(closure(tri, withQ, shortEmb, 4), ArgumentError);
}

TEST_CASE("closure is invariant under host relabeling") {
  std::mt19937_64 rng(123);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 2);
    Graph host = randomGraph(rng, n, 0.45);
    while (!scanDense(host, 10, Rational(2)).empty()) host = randomGraph(rng, n, 0.45);
    const std::vector<Vertex> emb{0, 1, 2};
    const Graph a = inducedSubgraph(host, emb);
    const ClosureResult base = closure(a, host, emb, 4);
    nontrivial += base.added.empty() ? 0 : 1;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph moved = relabel(host, perm);
    const std::vector<Vertex> emb2{perm[0], perm[1], perm[2]};
    const ClosureResult other = closure(a, moved, emb2, 4);
    CHECK(rootedForm(base, 3) == rootedForm(other, 3));
    CHECK(base.added.size() == other.added.size());
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("X1 construction") {
  const std::vector<Vertex> root{0};

  const Graph bare = Graph::path(4);
  const X1Result none = buildX1(bare, root, 4);
  CHECK(none.xHatVertices == root);
  CHECK(none.extensionCount == 0);
  CHECK(none.bound == 4);

  // Two K4 completions of vertex 0 sharing the non-root edge 2-3.
  const Graph twin(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(0, 4), Edge(2, 4),
                       Edge(3, 4)});
  const X1Result both = buildX1(twin, root, 4);
  CHECK(both.extensionCount == 2);
  CHECK(both.intersectingCount == 2);
  CHECK(both.xHat.vertexCount() == 5);
  CHECK(both.xHat.edgeCount() == 9);
  CHECK(both.x1.vertices.size() == 5);

  CHECK_THROWS_AS(buildX1(Graph::complete(7), root, 4, 7), RefusalError);
  CHECK_THROWS_AS(buildX1(twin, std::vector<Vertex>{0, 1}, 4), ArgumentError);
}
