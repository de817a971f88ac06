#include "zol/rooted_pair.hpp"

#include "zol/canonical.hpp"
#include "zol/errors.hpp"

#include <algorithm>
#include <string>

namespace zol {

RootedPair::RootedPair(Graph g, int roots, std::vector<Edge> rootEdges)
    : g_(std::move(g)), k_(roots), hEdges_(std::move(rootEdges)) {
  if (k_ < 0 || k_ > g_.vertexCount())
    throw ArgumentError("root count " + std::to_string(k_) + " outside 0.." + std::to_string(g_.vertexCount()));
  std::sort(hEdges_.begin(), hEdges_.end());
  if (std::adjacent_find(hEdges_.begin(), hEdges_.end()) != hEdges_.end())
    throw ArgumentError("repeated edge in E(H)");
  hRows_.assign(static_cast<std::size_t>(k_), 0);
  for (const Edge& e : hEdges_) {
    if (e.v >= k_ || e.u < 0) throw ArgumentError("edge of H must join two roots");
    if (!g_.adjacent(e.u, e.v)) throw ArgumentError("edge of H missing from G");
    hRows_[e.u] |= bit(e.v);
    hRows_[e.v] |= bit(e.u);
  }
}

RootedPair RootedPair::induced(Graph g, int roots) {
  if (roots < 0 || roots > g.vertexCount()) throw ArgumentError("root count out of range");
  std::vector<Edge> h;
  for (const Edge& e : g.edges())
    if (e.v < roots) h.push_back(e);
  return RootedPair(std::move(g), roots, std::move(h));
}

std::vector<Edge> RootedPair::newEdges() const {
  std::vector<Edge> out;
  for (const Edge& e : g_.edges())
    if (!inH(e.u, e.v)) out.push_back(e);
  return out;
}

bool RootedPair::hasNewRootEdge() const {
  for (Vertex u = 0; u < k_; ++u)
    if ((g_.row(u) & fullMask(k_)) != hRows_[u]) return true;
  return false;
}

namespace {

Graph newEdgeGraph(const RootedPair& p) {
  auto es = p.newEdges();
  return Graph(p.vertexCount(), es);
}

std::vector<int> rootColoring(const RootedPair& p) {
  std::vector<int> colors(static_cast<std::size_t>(p.vertexCount()), p.rootCount());
  for (int i = 0; i < p.rootCount(); ++i) colors[i] = i;
  return colors;
}

}  // namespace

bool pairIsomorphic(const RootedPair& p, const RootedPair& q) {
  if (p.rootCount() != q.rootCount() || p.vertexCount() != q.vertexCount()) return false;
  if (p.newEdgeCount() != q.newEdgeCount()) return false;
  auto colors = rootColoring(p);
  return canonicalForm(newEdgeGraph(p), colors) == canonicalForm(newEdgeGraph(q), colors);
}

bool pairStructurallyIsomorphic(const RootedPair& p, const RootedPair& q) {
  return p.rootCount() == q.rootCount() && p.rootEdges() == q.rootEdges() && pairIsomorphic(p, q);
}

}  // namespace zol
