#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zol {

using Vertex = int;

/// Dense graphs keep one 64-bit adjacency row per vertex.
inline constexpr int kDenseVertexLimit = 64;

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

template <class G>
concept GraphLike = requires(const G& g, Vertex u) {
  { g.vertexCount() } -> std::convertible_to<int>;
  { g.adjacent(u, u) } -> std::same_as<bool>;
  { g.neighbors(u) } -> std::convertible_to<std::span<const Vertex>>;
};

/// Finite simple undirected graph on vertices 0..n-1, n <= kDenseVertexLimit.
/// Immutable; stores bitset rows for O(1) adjacency and sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws ArgumentError on self-loops, out-of-range endpoints or repeated pairs.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph complete(int n);
  /// Path 0-1-...-(n-1).
  static Graph path(int n);
  static Graph cycle(int n);

  int vertexCount() const { return n_; }
  std::size_t edgeCount() const { return edgeCount_; }

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(Vertex u) const { return rows_[u]; }
  std::span<const Vertex> neighbors(Vertex u) const;
  int degree(Vertex u) const;

  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Number of edges with both endpoints in `mask`.
  int edgesWithin(std::uint64_t mask) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  void buildLists();

  int n_ = 0;
  std::size_t edgeCount_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> offsets_;
  std::vector<Vertex> targets_;
};

/// Adjacency-list graph without the dense vertex ceiling; used for sampled hosts.
class SparseGraph {
 public:
  SparseGraph() = default;
  SparseGraph(int n, std::span<const Edge> edges);
  explicit SparseGraph(const Graph& g);

  int vertexCount() const { return n_; }
  std::size_t edgeCount() const { return targets_.size() / 2; }
  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  int degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  std::vector<Edge> edges() const;

  /// Dense copy; throws ArgumentError when n exceeds kDenseVertexLimit.
  Graph toDense() const;

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Relabels `s` positionally to 0..|s|-1 keeping exactly the edges of g inside s.
Graph inducedSubgraph(const Graph& g, std::span<const Vertex> s);

/// Vertex-set mask version of inducedSubgraph (vertices in increasing order).
Graph inducedSubgraph(const Graph& g, std::uint64_t mask);

/// Union of a and b. identification[j] is the a-vertex that b-vertex j is glued
/// to, or nullopt for a fresh vertex (fresh vertices are appended in b order).
Graph unionGraphs(const Graph& a, const Graph& b, std::span<const std::optional<Vertex>> identification);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph disjointUnion(const Graph& a, const Graph& b);

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }
inline std::uint64_t fullMask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace zol
