#include "zol/canonical.hpp"

#include "zol/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace zol {

namespace {

// cell[v] is the rank of v's cell; ranks are dense 0..cells-1.
using Partition = std::vector<int>;

int cellCount(const Partition& p) { return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1; }

void refine(const Graph& g, Partition& cell) {
  const int n = g.vertexCount();
  int cells = cellCount(cell);
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.push_back(cell[v]);
      for (Vertex w : g.neighbors(v)) s.push_back(cell[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const int next = static_cast<int>(distinct.size());
    if (next == cells) return;
    cells = next;
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  void run(Partition p) {
    refine(g_, p);
    descend(p);
  }

  std::vector<Vertex> best() const { return bestPerm_; }

 private:
  std::vector<std::uint64_t> certificate(const Partition& p) const {
    const int n = g_.vertexCount();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
      for (Vertex w : g_.neighbors(u)) rows[p[u]] |= bit(p[w]);
    return rows;
  }

  void descend(const Partition& p) {
    const int n = g_.vertexCount();
    const int cells = cellCount(p);
    if (cells == n) {
      auto cert = certificate(p);
      if (!bestCert_ || cert < *bestCert_) {
        bestCert_ = std::move(cert);
        bestPerm_ = p;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int v = 0; v < n; ++v) ++size[p[v]];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
      if (p[v] == target) members.push_back(v);

    // Twins (same neighborhood up to each other) lead to equivalent subtrees.
    std::vector<Vertex> tried;
    for (Vertex v : members) {
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
        return (g_.row(u) & ~bit(v)) == (g_.row(v) & ~bit(u));
      });
      if (twin) continue;
      tried.push_back(v);
      Partition child(p.size());
      for (int w = 0; w < n; ++w) {
        if (p[w] < target) child[w] = p[w];
        else if (w == v) child[w] = target;
        else if (p[w] == target) child[w] = target + 1;
        else child[w] = p[w] + 1;
      }
      refine(g_, child);
      descend(child);
    }
  }

  const Graph& g_;
  std::optional<std::vector<std::uint64_t>> bestCert_;
  std::vector<Vertex> bestPerm_;
};

Partition initialPartition(int n, std::span<const int> colors) {
  Partition p(static_cast<std::size_t>(n), 0);
  if (colors.empty()) return p;
  if (static_cast<int>(colors.size()) != n) throw ArgumentError("coloring size mismatch");
  std::vector<int> distinct(colors.begin(), colors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int v = 0; v < n; ++v)
    p[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin());
  return p;
}

}  // namespace

std::vector<Vertex> canonicalLabeling(const Graph& g, std::span<const int> colors) {
  if (g.vertexCount() == 0) return {};
  Search search(g);
  search.run(initialPartition(g.vertexCount(), colors));
  return search.best();
}

CanonicalForm canonicalForm(const Graph& g, std::span<const int> colors) {
  const int n = g.vertexCount();
  auto perm = canonicalLabeling(g, colors);
  CanonicalForm cf;
  cf.n = n;
  cf.rows.assign(static_cast<std::size_t>(n), 0);
  cf.colors.assign(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    if (!colors.empty()) cf.colors[perm[u]] = colors[u];
    for (Vertex w : g.neighbors(u)) cf.rows[perm[u]] |= bit(perm[w]);
  }
  return cf;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertexCount() != b.vertexCount() || a.edgeCount() != b.edgeCount()) return false;
  return canonicalForm(a) == canonicalForm(b);
}

}  // namespace zol
