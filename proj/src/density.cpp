#include "zol/density.hpp"

#include "zol/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <queue>

namespace zol {

namespace {

class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1), level_(nodes), it_(nodes) {}

  void addArc(int from, int to, std::int64_t cap, std::int64_t reverseCap = 0) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], reverseCap});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network after run().
  std::vector<char> sourceSide(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[u] + 1) {
        std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[a ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

struct Gain {
  std::int64_t value;   // max over S of b*e(S) - a*|S|
  std::uint64_t argmax;  // inclusion-minimal maximizer
};

std::int64_t toInt64(const Rational::Integer& v) { return v.convert_to<std::int64_t>(); }

// Maximizes b*e(S) - a*|S| for g = a/b, optionally forcing `forced` into S.
Gain maxGain(const Graph& g, const Rational& ratio, std::optional<Vertex> forced = std::nullopt) {
  const int n = g.vertexCount();
  const std::int64_t a = toInt64(ratio.numerator());
  const std::int64_t b = toInt64(ratio.denominator());
  const std::int64_t big = b * static_cast<std::int64_t>(std::max<std::size_t>(g.edgeCount(), 1));
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  const int s = n;
  const int t = n + 1;
  MaxFlow flow(n + 2);
  for (int v = 0; v < n; ++v) {
    flow.addArc(s, v, forced && *forced == v ? inf : big);
    flow.addArc(v, t, big + 2 * a - b * g.degree(v));
  }
  for (const Edge& e : g.edges()) flow.addArc(e.u, e.v, b, b);
  const std::int64_t cut = flow.run(s, t);
  auto side = flow.sourceSide(s);
  std::uint64_t mask = 0;
  for (int v = 0; v < n; ++v)
    if (side[v]) mask |= bit(v);
  // cut = n*big - 2*max (+ the forced vertex's source arc never saturates).
  const std::int64_t twice = static_cast<std::int64_t>(n) * big - cut;
  return {twice / 2, mask};
}

Rational maskDensity(const Graph& g, std::uint64_t mask) {
  return Rational(g.edgesWithin(mask), std::popcount(mask));
}

void requireNonEmpty(const Graph& g) {
  if (g.vertexCount() == 0) throw DomainError("density of the empty graph is undefined");
}

}  // namespace

Rational density(const Graph& g) {
  requireNonEmpty(g);
  return Rational(static_cast<std::int64_t>(g.edgeCount()), g.vertexCount());
}

std::uint64_t densestSubset(const Graph& g) {
  requireNonEmpty(g);
  std::uint64_t best = fullMask(g.vertexCount());
  Rational rho = density(g);
  while (true) {
    Gain gain = maxGain(g, rho);
    if (gain.value <= 0) return best;
    best = gain.argmax;
    rho = maskDensity(g, best);
  }
}

Rational maximalDensity(const Graph& g) { return maskDensity(g, densestSubset(g)); }

bool isBalanced(const Graph& g) {
  requireNonEmpty(g);
  return maxGain(g, density(g)).value == 0;
}

bool isStrictlyBalanced(const Graph& g) {
  requireNonEmpty(g);
  const int n = g.vertexCount();
  if (n == 1) return true;
  const Rational rho = density(g);
  if (maxGain(g, rho).value != 0) return false;
  for (int u = 0; u < n; ++u) {
    Gain gain = maxGain(g, rho, u);
    if (gain.value == 0 && gain.argmax != fullMask(n)) return false;
  }
  return true;
}

}  // namespace zol
