#include "zol/graph.hpp"

#include "zol/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace zol {

namespace {

void checkVertexCount(int n) {
  if (n < 0) throw ArgumentError("negative vertex count");
  if (n > kDenseVertexLimit)
    throw ArgumentError("vertex count " + std::to_string(n) + " exceeds dense limit " +
                        std::to_string(kDenseVertexLimit));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  checkVertexCount(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
  buildLists();
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  checkVertexCount(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw ArgumentError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for n=" +
                          std::to_string(n));
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    if (adjacent(e.u, e.v))
      throw ArgumentError("repeated edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    rows_[e.u] |= bit(e.v);
    rows_[e.v] |= bit(e.u);
    ++edgeCount_;
  }
  buildLists();
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
  return Graph(n, es);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
  return Graph(n, es);
}

void Graph::buildLists() {
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  targets_.clear();
  targets_.reserve(edgeCount_ * 2);
  for (int u = 0; u < n_; ++u) {
    for (std::uint64_t r = rows_[u]; r != 0; r &= r - 1) targets_.push_back(std::countr_zero(r));
    offsets_[u + 1] = static_cast<int>(targets_.size());
  }
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
}

int Graph::degree(Vertex u) const { return std::popcount(rows_[u]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edgeCount_);
  for (int u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

int Graph::edgesWithin(std::uint64_t mask) const {
  int twice = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) twice += std::popcount(rows_[std::countr_zero(m)] & mask);
  return twice / 2;
}

SparseGraph::SparseGraph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw ArgumentError("negative vertex count");
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw ArgumentError("invalid edge in sparse graph");
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
  targets_.resize(static_cast<std::size_t>(offsets_[n]));
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
  for (int u = 0; u < n; ++u) {
    auto first = targets_.begin() + offsets_[u];
    auto last = targets_.begin() + offsets_[u + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) throw ArgumentError("repeated edge in sparse graph");
  }
}

SparseGraph::SparseGraph(const Graph& g) {
  auto es = g.edges();
  *this = SparseGraph(g.vertexCount(), es);
}

bool SparseGraph::adjacent(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> SparseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edgeCount());
  for (int u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph SparseGraph::toDense() const {
  auto es = edges();
  return Graph(n_, es);
}

Graph inducedSubgraph(const Graph& g, std::span<const Vertex> s) {
  std::uint64_t seen = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertexCount()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    if (seen & bit(v)) throw ArgumentError("duplicate vertex " + std::to_string(v) + " in subset");
    seen |= bit(v);
  }
  std::vector<Edge> es;
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(s[i], s[j])) es.emplace_back(i, j);
  return Graph(m, es);
}

Graph inducedSubgraph(const Graph& g, std::uint64_t mask) {
  std::vector<Vertex> s;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) s.push_back(std::countr_zero(m));
  return inducedSubgraph(g, s);
}

Graph unionGraphs(const Graph& a, const Graph& b, std::span<const std::optional<Vertex>> identification) {
  if (static_cast<int>(identification.size()) != b.vertexCount())
    throw ArgumentError("identification must list every vertex of the second graph");
  std::vector<Vertex> image(static_cast<std::size_t>(b.vertexCount()));
  std::uint64_t used = 0;
  int next = a.vertexCount();
  for (int j = 0; j < b.vertexCount(); ++j) {
    if (identification[j]) {
      Vertex t = *identification[j];
      if (t < 0 || t >= a.vertexCount()) throw ArgumentError("identification target out of range");
      if (used & bit(t)) throw ArgumentError("identification is not injective");
      used |= bit(t);
      image[j] = t;
    } else {
      image[j] = next++;
    }
  }
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) {
    Edge mapped(image[e.u], image[e.v]);
    if (mapped.u < a.vertexCount() && mapped.v < a.vertexCount() && a.adjacent(mapped.u, mapped.v)) continue;
    es.push_back(mapped);
  }
  return Graph(next, es);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.vertexCount()) throw ArgumentError("permutation size mismatch");
  std::uint64_t seen = 0;
  for (Vertex v : perm) {
    if (v < 0 || v >= g.vertexCount() || (seen & bit(v))) throw ArgumentError("not a permutation");
    seen |= bit(v);
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertexCount(), es);
}

Graph disjointUnion(const Graph& a, const Graph& b) {
  std::vector<std::optional<Vertex>> id(static_cast<std::size_t>(b.vertexCount()));
  return unionGraphs(a, b, id);
}

}  // namespace zol
