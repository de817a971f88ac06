#pragma once

#include "zol/graph.hpp"
#include "zol/rational.hpp"
#include "zol/rooted_pair.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace zol {

// Vertex x_i of the constructions has label i-1. Root edges (E(H1), E(H2))
// are optional and default to none. Throw ArgumentError on invalid input.

/// G1 = K_k over H1 on x_1..x_{k-3}.
RootedPair buildG1H1(int k, const std::vector<Edge>& h1 = {});

/// H2 on x_1..x_{k-2}; G2 adds x_{k-1} joined to every root.
RootedPair buildG2H2(int k, const std::vector<Edge>& h2 = {});

/// (G3^{i_1..i_t}, H2). seq holds i_1..i_t (1-based, distinct, in 1..k-2).
/// Vertex x_k^{i_1..i_j} gets label k-2+j and is joined to x_1..x_{k-1}
/// except x_{i_j}.
RootedPair buildG3(int k, const std::vector<int>& seq, const std::vector<Edge>& h2 = {});

/// (G3^{seq}(U), H2): one extra vertex per member of U, joined to its k-2
/// vertices (labels of G3^{seq}). Extra vertices follow U's order.
RootedPair buildG3U(int k, const std::vector<int>& seq, const std::vector<std::vector<Vertex>>& family,
                    const std::vector<Edge>& h2 = {});

/// (G4, H1): x_{k+1}, x_{k+2}, x_{k+3} get labels k-3, k-2, k-1.
RootedPair buildG4(int k, const std::vector<Edge>& h1 = {});
/// (G4^1, H1): x^1_{k+4} gets label k.
RootedPair buildG4v1(int k, const std::vector<Edge>& h1 = {});
/// (G4^2, H1): x^2_{k+4}, x^2_{k+5} get labels k, k+1.
RootedPair buildG4v2(int k, const std::vector<Edge>& h1 = {});

/// Connected vertex sets of size below maxV whose induced density exceeds
/// threshold, each sorted, listed in lexicographic order. Any violating set
/// contains a violating connected component, so an empty result certifies
/// the whole guard at this bound.
std::vector<std::vector<Vertex>> scanDense(const Graph& host, int maxV, const Rational& threshold);

/// Default and hard ceiling for scanDense's maxV (ZOL_SCAN_MAX_V overrides the ceiling).
inline constexpr int kScanDefaultMaxV = 6;
int scanCeiling();

struct ClosureExtension {
  int step = 0;                            // 1..k-1
  std::vector<Vertex> subset;              // the k-2 vertices of A, host labels
  std::vector<std::vector<Vertex>> family; // U, as G3 labels (empty on the last step)
  std::vector<Vertex> w;                   // new host vertices, sorted
};

struct ClosureResult {
  std::vector<Vertex> vertices;  // host labels: A's embedding first, then additions
  Graph graph;                   // positional labels over `vertices`
  std::vector<ClosureExtension> added;
};

/// [A] in host, for A embedded by embedding[i] = host vertex of A's vertex i.
/// Among several candidate extensions the one with the lexicographically
/// smallest sorted vertex set is added; every vertex of every candidate is
/// then removed from the working host.
ClosureResult closure(const Graph& a, const Graph& host, std::span<const Vertex> embedding, int k);

struct X1Result {
  std::vector<Vertex> xHatVertices;  // host labels, roots first
  Graph xHat;
  ClosureResult x1;
  int extensionCount = 0;
  int intersectingCount = 0;
  int bound = 0;  // 2(k-3)(k-2)
};

/// X^1 construction over roots x^_1..x^_{k-3}. Refuses (RefusalError) when
/// scanDense(host, guardMaxV, k-2) finds a dense subgraph.
X1Result buildX1(const Graph& host, std::span<const Vertex> roots, int k, int guardMaxV = kScanDefaultMaxV);

}  // namespace zol
