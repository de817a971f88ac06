#include "zol/constructions.hpp"

#include "zol/errors.hpp"
#include "zol/extensions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

namespace zol {

namespace {

void requireK(int k) {
  if (k < 4) throw ArgumentError("constructions need k >= 4, got " + std::to_string(k));
  if (k > 32) throw ArgumentError("k too large for the dense representation");
}

void requireRootEdges(const std::vector<Edge>& h, int roots, const char* name) {
  for (const Edge& e : h)
    if (e.u < 0 || e.v >= roots || e.u == e.v)
      throw ArgumentError(std::string(name) + " edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " is not between roots 0.." + std::to_string(roots - 1));
}

void requireSequence(int k, const std::vector<int>& seq) {
  if (seq.empty() || static_cast<int>(seq.size()) > k - 2)
    throw ArgumentError("index sequence must have 1.." + std::to_string(k - 2) + " entries");
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (seq[j] < 1 || seq[j] > k - 2)
      throw ArgumentError("index " + std::to_string(seq[j]) + " outside 1.." + std::to_string(k - 2));
    for (std::size_t i = 0; i < j; ++i)
      if (seq[i] == seq[j]) throw ArgumentError("index " + std::to_string(seq[j]) + " repeated");
  }
}

// Edges of G4 without H1.
std::vector<Edge> g4Edges(int k) {
  const Vertex a = k - 3, b = k - 2, c = k - 1;
  std::vector<Edge> es;
  for (Vertex x = 0; x < k - 4; ++x) es.emplace_back(x, a);
  for (Vertex x = 0; x < k - 3; ++x) es.emplace_back(x, b);
  for (Vertex x = 0; x < k - 3; ++x) es.emplace_back(x, c);
  es.emplace_back(a, b);
  es.emplace_back(a, c);
  es.emplace_back(b, c);
  return es;
}

std::vector<Edge> withRootEdges(std::vector<Edge> es, const std::vector<Edge>& h) {
  es.insert(es.end(), h.begin(), h.end());
  return es;
}

}  // namespace

RootedPair buildG1H1(int k, const std::vector<Edge>& h1) {
  requireK(k);
  requireRootEdges(h1, k - 3, "H1");
  return RootedPair(Graph::complete(k), k - 3, h1);
}

RootedPair buildG2H2(int k, const std::vector<Edge>& h2) {
  requireK(k);
  requireRootEdges(h2, k - 2, "H2");
  std::vector<Edge> es;
  for (Vertex x = 0; x < k - 2; ++x) es.emplace_back(x, k - 2);
  return RootedPair(Graph(k - 1, withRootEdges(es, h2)), k - 2, h2);
}

RootedPair buildG3(int k, const std::vector<int>& seq, const std::vector<Edge>& h2) {
  requireK(k);
  requireSequence(k, seq);
  requireRootEdges(h2, k - 2, "H2");
  std::vector<Edge> es;
  for (Vertex x = 0; x < k - 2; ++x) es.emplace_back(x, k - 2);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const Vertex z = k - 1 + static_cast<Vertex>(j);
    for (Vertex x = 0; x <= k - 2; ++x)
      if (x != seq[j] - 1) es.emplace_back(x, z);
  }
  const int n = k - 1 + static_cast<int>(seq.size());
  return RootedPair(Graph(n, withRootEdges(es, h2)), k - 2, h2);
}

RootedPair buildG3U(int k, const std::vector<int>& seq, const std::vector<std::vector<Vertex>>& family,
                    const std::vector<Edge>& h2) {
  const RootedPair base = buildG3(k, seq, h2);
  const int n = base.vertexCount();
  std::set<std::vector<Vertex>> seen;
  std::vector<Edge> es = base.graph().edges();
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Vertex> u = family[i];
    std::sort(u.begin(), u.end());
    if (static_cast<int>(u.size()) != k - 2)
      throw ArgumentError("member " + std::to_string(i) + " of U must have " + std::to_string(k - 2) + " vertices");
    if (std::adjacent_find(u.begin(), u.end()) != u.end() || u.front() < 0 || u.back() >= n)
      throw ArgumentError("member " + std::to_string(i) + " of U is not a set of G3 vertices");
    if (!seen.insert(u).second) throw ArgumentError("member " + std::to_string(i) + " of U repeated");
    for (Vertex x : u) es.emplace_back(x, n + static_cast<Vertex>(i));
  }
  return RootedPair(Graph(n + static_cast<int>(family.size()), es), k - 2, h2);
}

RootedPair buildG4(int k, const std::vector<Edge>& h1) {
  requireK(k);
  requireRootEdges(h1, k - 3, "H1");
  return RootedPair(Graph(k, withRootEdges(g4Edges(k), h1)), k - 3, h1);
}

RootedPair buildG4v1(int k, const std::vector<Edge>& h1) {
  requireK(k);
  requireRootEdges(h1, k - 3, "H1");
  std::vector<Edge> es = g4Edges(k);
  const Vertex y = k;
  for (Vertex x = 0; x < k - 3; ++x) es.emplace_back(x, y);
  es.emplace_back(k - 3, y);
  es.emplace_back(k - 1, y);
  return RootedPair(Graph(k + 1, withRootEdges(es, h1)), k - 3, h1);
}

RootedPair buildG4v2(int k, const std::vector<Edge>& h1) {
  requireK(k);
  requireRootEdges(h1, k - 3, "H1");
  std::vector<Edge> es = g4Edges(k);
  const Vertex y = k, z = k + 1;
  for (Vertex x = 0; x < k - 3; ++x) es.emplace_back(x, y);
  for (Vertex x = 0; x < k - 3; ++x) es.emplace_back(x, z);
  es.emplace_back(k - 3, y);
  es.emplace_back(k - 3, z);
  es.emplace_back(y, z);
  return RootedPair(Graph(k + 2, withRootEdges(es, h1)), k - 3, h1);
}

int scanCeiling() {
  if (const char* v = std::getenv("ZOL_SCAN_MAX_V")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw ArgumentError("malformed environment variable ZOL_SCAN_MAX_V");
    }
  }
  return 10;
}

namespace {

struct DenseScan {
  const Graph& g;
  int maxSize;
  std::int64_t num;
  std::int64_t den;
  Vertex start = 0;
  std::vector<std::vector<Vertex>> out;

  std::uint64_t closedNeighborhood(std::uint64_t s) const {
    std::uint64_t m = s;
    for (std::uint64_t r = s; r; r &= r - 1) m |= g.row(std::countr_zero(r));
    return m;
  }

  // ESU: each connected set is produced once, rooted at its least vertex.
  void extend(std::uint64_t sub, std::uint64_t ext) {
    const std::int64_t e = g.edgesWithin(sub);
    if (e * den > num * std::popcount(sub)) {
      std::vector<Vertex> vs;
      for (std::uint64_t r = sub; r; r &= r - 1) vs.push_back(std::countr_zero(r));
      out.push_back(std::move(vs));
    }
    if (std::popcount(sub) >= maxSize) return;
    const std::uint64_t above = ~fullMask(start + 1);
    const std::uint64_t seen = closedNeighborhood(sub);
    while (ext) {
      const Vertex w = std::countr_zero(ext);
      ext &= ext - 1;
      const std::uint64_t fresh = g.row(w) & above & ~seen;
      extend(sub | bit(w), ext | fresh);
    }
  }
};

}  // namespace

std::vector<std::vector<Vertex>> scanDense(const Graph& host, int maxV, const Rational& threshold) {
  if (maxV > scanCeiling())
    throw RefusalError("scan bound " + std::to_string(maxV) + " exceeds the ceiling " +
                       std::to_string(scanCeiling()));
  if (threshold.sign() < 0) throw ArgumentError("density threshold must be nonnegative");
  DenseScan scan{host, maxV - 1, threshold.numerator().convert_to<std::int64_t>(),
                 threshold.denominator().convert_to<std::int64_t>(), 0, {}};
  if (maxV <= 1) return {};
  for (Vertex v = 0; v < host.vertexCount(); ++v) {
    scan.start = v;
    scan.extend(bit(v), host.row(v) & ~fullMask(v + 1));
  }
  std::sort(scan.out.begin(), scan.out.end());
  return scan.out;
}

X1Result buildX1(const Graph& host, std::span<const Vertex> roots, int k, int guardMaxV) {
  requireK(k);
  if (static_cast<int>(roots.size()) != k - 3)
    throw ArgumentError("X1 needs " + std::to_string(k - 3) + " roots, got " + std::to_string(roots.size()));
  detail::validateVertices(host, roots, "root");
  const auto dense = scanDense(host, guardMaxV, Rational(k - 2));
  if (!dense.empty()) {
    std::string where;
    for (Vertex v : dense.front()) where += (where.empty() ? "" : ",") + std::to_string(v);
    throw RefusalError("host has a subgraph on fewer than " + std::to_string(guardMaxV) +
                       " vertices with density above " + std::to_string(k - 2) + " (vertices " + where + ")");
  }

  std::vector<Edge> h1;
  for (int i = 0; i < k - 3; ++i)
    for (int j = i + 1; j < k - 3; ++j)
      if (host.adjacent(roots[i], roots[j])) h1.emplace_back(i, j);
  const RootedPair g1 = buildG1H1(k, h1);
  const ExtensionQuery q{g1, std::vector<Vertex>(roots.begin(), roots.end()), false};
  const auto sets = extensionSets(host, q);

  std::uint64_t rootMask = 0;
  for (Vertex r : roots) rootMask |= bit(r);
  // Extender edges: every edge of the realized G1 copy outside host|roots.
  std::vector<std::set<Edge>> extenderEdges;
  for (const auto& w : sets) {
    std::vector<Vertex> all(roots.begin(), roots.end());
    all.insert(all.end(), w.begin(), w.end());
    std::set<Edge> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (!((rootMask & bit(all[i])) && (rootMask & bit(all[j])))) es.emplace(all[i], all[j]);
    extenderEdges.push_back(std::move(es));
  }
  std::vector<bool> intersecting(sets.size(), false);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const bool meet = std::any_of(extenderEdges[a].begin(), extenderEdges[a].end(),
                                    [&](const Edge& e) { return extenderEdges[b].count(e) > 0; });
      if (meet) intersecting[a] = intersecting[b] = true;
    }

  X1Result result;
  result.extensionCount = static_cast<int>(sets.size());
  result.bound = 2 * (k - 3) * (k - 2);
  result.xHatVertices.assign(roots.begin(), roots.end());
  std::set<Edge> edges;
  auto it = sets.begin();
  for (std::size_t i = 0; i < sets.size(); ++i, ++it) {
    if (!intersecting[i]) continue;
    ++result.intersectingCount;
    for (Vertex w : *it)
      if (std::find(result.xHatVertices.begin(), result.xHatVertices.end(), w) == result.xHatVertices.end())
        result.xHatVertices.push_back(w);
    edges.insert(extenderEdges[i].begin(), extenderEdges[i].end());
  }
  std::sort(result.xHatVertices.begin() + (k - 3), result.xHatVertices.end());
  std::vector<Vertex> position(static_cast<std::size_t>(host.vertexCount()), -1);
  for (std::size_t i = 0; i < result.xHatVertices.size(); ++i) position[result.xHatVertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> local;
  for (const Edge& e : h1) local.push_back(e);
  for (const Edge& e : edges) local.emplace_back(position[e.u], position[e.v]);
  result.xHat = Graph(static_cast<int>(result.xHatVertices.size()), local);
  result.x1 = closure(result.xHat, host, result.xHatVertices, k);
  return result;
}

}  // namespace zol
