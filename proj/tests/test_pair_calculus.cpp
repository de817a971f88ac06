#include "doctest.h"
#include "oracles.hpp"

#include "zol/constructions.hpp"
#include "zol/errors.hpp"
#include "zol/pair_calculus.hpp"

#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace zol;

namespace {

const Rational kHalf(1, 2);

RootedPair pendantPair() { return RootedPair(Graph(3, {Edge(0, 1), Edge(0, 2)}), 2, {Edge(0, 1)}); }
RootedPair k4OverEdge() { return RootedPair(Graph::complete(4), 2, {Edge(0, 1)}); }

RootedPair randomPair(std::mt19937_64& rng, int maxL) {
  const int l = 2 + static_cast<int>(rng() % (maxL - 1));
  const int k = static_cast<int>(rng() % l);
  std::bernoulli_distribution coin(0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
  std::vector<Edge> es, h;
  for (Vertex u = 0; u < l; ++u)
    for (Vertex v = u + 1; v < l; ++v)
      if (coin(rng)) {
        es.emplace_back(u, v);
        if (v < k && rng() % 2) h.emplace_back(u, v);
      }
  return RootedPair(Graph(l, es), k, h);
}

Rational randomAlpha(std::mt19937_64& rng) {
  static const Rational choices[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1), Rational(1, 4),
                                     Rational(3, 4), Rational(2, 5)};
  return choices[rng() % std::size(choices)];
}

// Canonical key of a pair up to permutations of its added vertices.
std::vector<int> pairKey(const RootedPair& p) {
  const int k = p.rootCount();
  const int l = p.vertexCount();
  std::vector<int> perm(static_cast<std::size_t>(l - k));
  std::iota(perm.begin(), perm.end(), k);
  std::vector<int> best;
  do {
    auto map = [&](Vertex v) { return v < k ? v : perm[v - k]; };
    std::vector<int> key{k, l};
    for (const Edge& e : p.rootEdges()) key.push_back(e.u * 64 + e.v);
    key.push_back(-1);
    std::vector<int> fresh;
    for (const Edge& e : p.newEdges()) {
      const Edge m(map(e.u), map(e.v));
      fresh.push_back(m.u * 64 + m.v);
    }
    std::sort(fresh.begin(), fresh.end());
    key.insert(key.end(), fresh.begin(), fresh.end());
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every pair with the given bounds, by brute force.
std::set<std::vector<int>> bruteEnumerate(int maxRoots, int maxAdded, const Rational& alpha, PairKind kind) {
  std::set<std::vector<int>> out;
  for (int k = 1; k <= maxRoots; ++k)
    for (int a = 1; a <= maxAdded; ++a) {
      const int l = k + a;
      std::vector<Edge> rootPairs, cross;
      for (Vertex u = 0; u < l; ++u)
        for (Vertex v = u + 1; v < l; ++v) (v < k ? rootPairs : cross).emplace_back(u, v);
      std::uint64_t rootCodes = 1;
      for (std::size_t i = 0; i < rootPairs.size(); ++i) rootCodes *= 3;
      for (std::uint64_t rc = 0; rc < rootCodes; ++rc)
        for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << cross.size()); ++cm) {
          std::vector<Edge> es, h;
          std::uint64_t c = rc;
          for (const Edge& e : rootPairs) {
            if (c % 3 != 0) es.push_back(e);
            if (c % 3 == 1) h.push_back(e);
            c /= 3;
          }
          for (Vertex i : oracle::members(cm)) es.push_back(cross[i]);
          const RootedPair p(Graph(l, es), k, h);
          const auto f = oracle::classify(p, alpha, false);
          const bool want = kind == PairKind::Safe ? f.safe : kind == PairKind::Rigid ? f.rigid : f.neutral;
          if (want) out.insert(pairKey(p));
        }
    }
  return out;
}

}  // namespace

TEST_CASE("f values") {
  CHECK(fValue(buildG2H2(4), kHalf) == Rational(0));
  CHECK(fValue(RootedPair(Graph::complete(4), 1, {}), kHalf) == Rational(0));
  CHECK(fValue(pendantPair(), kHalf) == kHalf);
  CHECK(fValue(Graph::complete(4), kHalf) == Rational(1));
  CHECK_THROWS_AS(fValue(pendantPair(), Rational(0)), DomainError);
}

TEST_CASE("classification examples") {
  const PairClass rigid = classifyPair(k4OverEdge(), kHalf);
  CHECK(rigid.rigid);
  CHECK_FALSE(rigid.safe);
  CHECK_FALSE(rigid.neutral);
  CHECK(rigid.f == Rational(-1, 2));
  CHECK(rigid.names() == std::vector<std::string>{"rigid"});

  const PairClass neutral = classifyPair(buildG2H2(4), kHalf);
  CHECK(neutral.neutral);
  CHECK_FALSE(neutral.safe);
  CHECK_FALSE(neutral.rigid);

  const PairClass safe = classifyPair(pendantPair(), kHalf);
  CHECK(safe.safe);
  CHECK_FALSE(safe.neutral);
  CHECK(safe.f == kHalf);

  CHECK_THROWS_AS(classifyPair(RootedPair(Graph::complete(2), 2, {Edge(0, 1)}), kHalf), ArgumentError);
}

TEST_CASE("G2 over H2 is neutral at alpha = 1/(k-2)") {
  for (int k = 4; k <= 8; ++k) {
    const Rational alpha(1, k - 2);
    CHECK(classifyPair(buildG2H2(k), alpha).neutral);
    CHECK(classifyPair(buildG2H2(k), alpha, SubgraphReading::AllSubgraphs).neutral);
  }
}

TEST_CASE("classification matches the definitions on random pairs") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const RootedPair p = randomPair(rng, 7);
    const Rational alpha = randomAlpha(rng);
    for (bool all : {false, true}) {
      if (all && p.newEdgeCount() > 14) continue;
      const auto want = oracle::classify(p, alpha, all);
      const auto got = classifyPair(p, alpha, all ? SubgraphReading::AllSubgraphs : SubgraphReading::VertexInduced);
      CHECK(got.safe == want.safe);
      CHECK(got.rigid == want.rigid);
      CHECK(got.neutral == want.neutral);
      CHECK(got.f == fValue(p, alpha));
      CHECK_FALSE((got.safe && got.rigid));
      if (got.neutral) CHECK(got.f.isZero());
      if (got.safe) CHECK(got.f.sign() > 0);
      if (got.rigid) CHECK(got.f.sign() < 0);
      ++checked;
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("neutral chain examples") {
  const Graph tri = Graph::complete(3);
  CHECK(isNeutralChain(tri, 0b011, kHalf));
  const auto chain = findNeutralChain(tri, 0b011, kHalf);
  REQUIRE(chain);
  CHECK(chain->blocks == std::vector<std::uint64_t>{0b100});
  CHECK(chain->anchors == std::vector<std::uint64_t>{0b011});
  CHECK(verifyNeutralChain(tri, 0b011, *chain, kHalf));

  CHECK_FALSE(isNeutralChain(Graph(3, {Edge(0, 1), Edge(0, 2)}), 0b011, kHalf));
  CHECK(isNeutralChain(tri, 0b111, kHalf));  // empty chain

  // Two triangles hung on the same edge.
  const Graph book(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 3)});
  const auto two = findNeutralChain(book, 0b0011, kHalf);
  REQUIRE(two);
  CHECK(verifyNeutralChain(book, 0b0011, *two, kHalf));

  // A block attached to a non-anchor earlier vertex violates the no-cross-edge rule.
  NeutralChain bad{{0b0100, 0b1000}, {0b0011, 0b0001}};
  const Graph crossing(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(2, 3)});
  CHECK_FALSE(verifyNeutralChain(crossing, 0b0011, bad, kHalf));
}

TEST_CASE("chain search agrees with exhaustive partition search") {
  // Independent search over all ordered partitions, with T chosen freely.
  std::function<bool(const Graph&, std::uint64_t, const Rational&)> brute = [&](const Graph& g, std::uint64_t cur,
                                                                               const Rational& alpha) {
    const std::uint64_t rest = fullMask(g.vertexCount()) & ~cur;
    if (rest == 0) return true;
    for (std::uint64_t block = rest; block; block = (block - 1) & rest)
      for (std::uint64_t t = cur;; t = (t - 1) & cur) {
        bool noCross = true;
        for (Vertex b : oracle::members(block))
          if (g.row(b) & (cur & ~t)) noCross = false;
        if (noCross) {
          std::vector<Vertex> order = oracle::members(t);
          for (Vertex b : oracle::members(block)) order.push_back(b);
          const RootedPair inc = RootedPair::induced(inducedSubgraph(g, order), std::popcount(t));
          if (oracle::classify(inc, alpha, false).neutral && brute(g, cur | block, alpha)) return true;
        }
        if (t == 0) break;
      }
    return false;
  };
  std::mt19937_64 rng(99);
  int positives = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::bernoulli_distribution coin(0.55);
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    const Graph g(n, es);
    const int baseSize = 1 + static_cast<int>(rng() % 2);
    const Rational alpha = rng() % 2 ? kHalf : Rational(1);
    const bool want = brute(g, fullMask(baseSize), alpha);
    CHECK(isNeutralChain(g, fullMask(baseSize), alpha) == want);
    if (want) {
      ++positives;
      CHECK(verifyNeutralChain(g, fullMask(baseSize), *findNeutralChain(g, fullMask(baseSize), alpha), alpha));
    }
  }
  CHECK(positives > 5);
}

TEST_CASE("enumeration examples") {
  const auto neutral = enumeratePairs(2, 1, kHalf, PairKind::Neutral);
  std::size_t twoRoot = 0;
  for (const auto& p : neutral)
    if (p.rootCount() == 2) ++twoRoot;
  CHECK(twoRoot == 2);
  CHECK(enumeratePairs(1, 1, kHalf, PairKind::Rigid).empty());
  CHECK(enumeratePairs(1, 1, Rational(1), PairKind::Neutral).size() == 1);
  CHECK_THROWS_AS(enumeratePairs(9, 1, kHalf, PairKind::Neutral), RefusalError);
  CHECK_THROWS_AS(enumeratePairs(0, 1, kHalf, PairKind::Neutral), ArgumentError);
  EnumerationLimits tiny;
  tiny.maxPairs = 1;
  CHECK_THROWS_AS(enumeratePairs(3, 2, kHalf, PairKind::Safe, tiny), RefusalError);
}

TEST_CASE("enumeration is complete and duplicate-free") {
  for (PairKind kind : {PairKind::Safe, PairKind::Rigid, PairKind::Neutral})
    for (const Rational& alpha : {kHalf, Rational(1), Rational(2, 3)}) {
      const auto got = enumeratePairs(3, 2, alpha, kind);
      std::set<std::vector<int>> keys;
      for (const auto& p : got) {
        keys.insert(pairKey(p));
        CHECK(classifyPair(p, alpha).has(kind));
      }
      CHECK(keys.size() == got.size());
      CHECK(keys == bruteEnumerate(3, 2, alpha, kind));
    }
}

TEST_CASE("extender patterns have edgeless H and no new root edges") {
  const auto pats = enumerateExtenderPatterns(3, 2, kHalf, PairKind::Neutral);
  CHECK_FALSE(pats.empty());
  for (const auto& p : pats) {
    CHECK(p.rootEdges().empty());
    CHECK_FALSE(p.hasNewRootEdge());
    CHECK(classifyPair(p, kHalf).neutral);
    for (const auto& q : pats)
      if (&p != &q) CHECK_FALSE(pairIsomorphic(p, q));
  }
}
