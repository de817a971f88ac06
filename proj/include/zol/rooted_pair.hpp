#pragma once

#include "zol/graph.hpp"

#include <cstdint>
#include <vector>

namespace zol {

/// A pair (G, H): the first k labels of G are the roots V(H), and E(H) is a
/// subset of G's edges among the roots. k == l is accepted but flagged as
/// degenerate (only meaningful for chain checks).
class RootedPair {
 public:
  RootedPair() = default;
  RootedPair(Graph g, int roots, std::vector<Edge> rootEdges);

  /// H = G restricted to the roots (no root-root edge is "new").
  static RootedPair induced(Graph g, int roots);

  const Graph& graph() const { return g_; }
  int rootCount() const { return k_; }
  int vertexCount() const { return g_.vertexCount(); }
  bool degenerate() const { return k_ == g_.vertexCount(); }

  /// v(G,H)
  int addedCount() const { return g_.vertexCount() - k_; }
  /// e(G,H)
  int newEdgeCount() const { return static_cast<int>(g_.edgeCount() - hEdges_.size()); }

  const std::vector<Edge>& rootEdges() const { return hEdges_; }
  bool inH(Vertex u, Vertex v) const { return u < k_ && v < k_ && ((hRows_[u] >> v) & 1U); }
  /// {u,v} in E(G) \ E(H).
  bool isNewEdge(Vertex u, Vertex v) const { return g_.adjacent(u, v) && !inH(u, v); }
  std::vector<Edge> newEdges() const;
  /// Some edge of E(G) \ E(H) joins two roots.
  bool hasNewRootEdge() const;

  std::uint64_t rootMask() const { return fullMask(k_); }

  friend bool operator==(const RootedPair& a, const RootedPair& b) {
    return a.k_ == b.k_ && a.g_ == b.g_ && a.hEdges_ == b.hEdges_;
  }

 private:
  Graph g_;
  int k_ = 0;
  std::vector<Edge> hEdges_;  // sorted
  std::vector<std::uint64_t> hRows_;
};

/// Isomorphism of pairs with equal root and vertex counts under a bijection
/// that fixes every root position; only the edge sets E(G) \ E(H) are compared.
bool pairIsomorphic(const RootedPair& p, const RootedPair& q);

/// Like pairIsomorphic but E(H) must coincide as well.
bool pairStructurallyIsomorphic(const RootedPair& p, const RootedPair& q);

}  // namespace zol
