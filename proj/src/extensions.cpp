#include "zol/extensions.hpp"

#include "zol/density.hpp"

namespace zol::detail {

MatchPlan makePlan(const RootedPair& p, bool strict) {
  MatchPlan plan;
  plan.k = p.rootCount();
  plan.l = p.vertexCount();
  plan.realizable = !p.hasNewRootEdge();
  const Graph& g = p.graph();

  std::vector<int> slotOf(static_cast<std::size_t>(plan.l), -1);
  for (Vertex r = 0; r < plan.k; ++r) slotOf[r] = r;
  std::vector<Vertex> queue;
  for (Vertex r = 0; r < plan.k; ++r) queue.push_back(r);
  auto place = [&](Vertex v) {
    MatchStep step;
    step.patternVertex = v;
    for (Vertex u = 0; u < plan.l; ++u) {
      if (slotOf[u] < 0) continue;
      if (g.adjacent(u, v)) step.checks.emplace_back(slotOf[u], true);
      else if (strict) step.checks.emplace_back(slotOf[u], false);
    }
    slotOf[v] = plan.k + static_cast<int>(plan.steps.size());
    plan.steps.push_back(std::move(step));
    queue.push_back(v);
  };
  std::size_t head = 0;
  while (static_cast<int>(plan.steps.size()) < plan.l - plan.k) {
    if (head == queue.size()) {
      for (Vertex v = plan.k; v < plan.l; ++v)
        if (slotOf[v] < 0) {
          place(v);
          break;
        }
      continue;
    }
    const Vertex u = queue[head++];
    for (Vertex v : g.neighbors(u))
      if (slotOf[v] < 0) place(v);
  }
  return plan;
}

}  // namespace zol::detail

namespace zol {

std::vector<RootedPair> sigmaPatterns(PairKind kind, int rBound, int tBound, const Rational& alpha) {
  if (kind == PairKind::Safe) throw ArgumentError("maximality is defined for rigid or neutral pattern sets");
  return enumerateExtenderPatterns(tBound, rBound, alpha, kind);
}

void requireMaximalCopyHypotheses(const Graph& g, const Rational& alpha) {
  if (g.vertexCount() == 0) throw ArgumentError("copy pattern must have at least one vertex");
  if (!isStrictlyBalanced(g)) throw ArgumentError("hypothesis failed: pattern graph is not strictly balanced");
  if (density(g) * alpha >= Rational(1))
    throw ArgumentError("hypothesis failed: pattern density " + density(g).str() + " is not below 1/alpha");
}

}  // namespace zol
