#pragma once

#include "zol/errors.hpp"
#include "zol/graph.hpp"
#include "zol/pair_calculus.hpp"
#include "zol/rational.hpp"
#include "zol/rooted_pair.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace zol {

/// Roots are host vertices; roots[i] plays pattern vertex i. The host side of
/// H is always the host restricted to the roots.
struct ExtensionQuery {
  RootedPair pattern;
  std::vector<Vertex> roots;
  bool strict = false;
};

namespace detail {

struct MatchStep {
  Vertex patternVertex = 0;
  // (slot, must be adjacent); slots < k are roots, slot k+j is the j-th step.
  std::vector<std::pair<int, bool>> checks;
};

struct MatchPlan {
  int k = 0;
  int l = 0;
  bool realizable = true;
  std::vector<MatchStep> steps;
};

/// Added vertices in BFS order from the roots. A new edge between two roots
/// can never be realized because the host side of H is induced.
MatchPlan makePlan(const RootedPair& p, bool strict);

template <GraphLike G>
void validateVertices(const G& host, std::span<const Vertex> vs, const char* what) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= host.vertexCount())
      throw ArgumentError(std::string(what) + " vertex " + std::to_string(vs[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j]) throw ArgumentError(std::string(what) + " vertex " + std::to_string(vs[i]) + " repeated");
  }
}

template <GraphLike G, class Allow, class Visit>
bool search(const G& host, const MatchPlan& plan, std::vector<Vertex>& slots, std::size_t step, Allow& allow,
            Visit& visit) {
  if (step == plan.steps.size()) {
    return visit(std::span<const Vertex>(slots.data() + plan.k, plan.steps.size()));
  }
  const MatchStep& s = plan.steps[step];
  int anchor = -1;
  for (const auto& [slot, must] : s.checks)
    if (must && (anchor < 0 || host.degree(slots[slot]) < host.degree(slots[anchor]))) anchor = slot;

  auto tryVertex = [&](Vertex c) {
    for (std::size_t i = 0; i < plan.k + step; ++i)
      if (slots[i] == c) return true;
    for (const auto& [slot, must] : s.checks)
      if (host.adjacent(slots[slot], c) != must) return true;
    if (!allow(c)) return true;
    slots[plan.k + step] = c;
    return search(host, plan, slots, step + 1, allow, visit);
  };
  if (anchor >= 0) {
    for (Vertex c : host.neighbors(slots[anchor]))
      if (!tryVertex(c)) return false;
  } else {
    for (Vertex c = 0; c < host.vertexCount(); ++c)
      if (!tryVertex(c)) return false;
  }
  return true;
}

}  // namespace detail

/// Calls visit(w) for every injective assignment w of the added pattern
/// vertices (w[j] is the image of pattern vertex k+j) that makes the host an
/// extension over `roots`. allow(c) filters candidate vertices. visit returns
/// false to stop early.
template <GraphLike G, class Allow, class Visit>
void forEachExtension(const G& host, const RootedPair& pattern, std::span<const Vertex> roots, bool strict,
                      Allow&& allow, Visit&& visit) {
  if (static_cast<int>(roots.size()) != pattern.rootCount())
    throw ArgumentError("expected " + std::to_string(pattern.rootCount()) + " roots, got " +
                        std::to_string(roots.size()));
  detail::validateVertices(host, roots, "root");
  const detail::MatchPlan plan = detail::makePlan(pattern, strict);
  if (!plan.realizable) return;
  std::vector<Vertex> slots(static_cast<std::size_t>(plan.l));
  std::copy(roots.begin(), roots.end(), slots.begin());
  detail::search(host, plan, slots, 0, allow, visit);
}

template <GraphLike G>
bool isExtensionAssignment(const G& host, const ExtensionQuery& q, std::span<const Vertex> w) {
  const RootedPair& p = q.pattern;
  if (static_cast<int>(q.roots.size()) != p.rootCount())
    throw ArgumentError("expected " + std::to_string(p.rootCount()) + " roots");
  if (static_cast<int>(w.size()) != p.addedCount())
    throw ArgumentError("expected " + std::to_string(p.addedCount()) + " extension vertices, got " +
                        std::to_string(w.size()));
  std::vector<Vertex> all(q.roots.begin(), q.roots.end());
  all.insert(all.end(), w.begin(), w.end());
  detail::validateVertices(host, all, "assignment");
  if (p.hasNewRootEdge()) return false;
  for (Vertex i = 0; i < p.vertexCount(); ++i)
    for (Vertex j = std::max(i + 1, p.rootCount()); j < p.vertexCount(); ++j) {
      const bool want = p.graph().adjacent(i, j);
      const bool have = host.adjacent(all[i], all[j]);
      if (want && !have) return false;
      if (q.strict && have && !want) return false;
    }
  return true;
}

/// Number of ordered assignments (numerations) realizing an extension.
template <GraphLike G>
std::uint64_t countExtensionEmbeddings(const G& host, const ExtensionQuery& q) {
  std::uint64_t count = 0;
  forEachExtension(
      host, q.pattern, q.roots, q.strict, [](Vertex) { return true; },
      [&](std::span<const Vertex>) {
        ++count;
        return true;
      });
  return count;
}

/// Distinct vertex sets W admitting at least one numeration (the paper's I_W sum).
template <GraphLike G>
std::set<std::vector<Vertex>> extensionSets(const G& host, const ExtensionQuery& q) {
  std::set<std::vector<Vertex>> sets;
  forEachExtension(
      host, q.pattern, q.roots, q.strict, [](Vertex) { return true; },
      [&](std::span<const Vertex> w) {
        std::vector<Vertex> s(w.begin(), w.end());
        std::sort(s.begin(), s.end());
        sets.insert(std::move(s));
        return true;
      });
  return sets;
}

template <GraphLike G>
std::uint64_t countExtensionSets(const G& host, const ExtensionQuery& q) {
  if (q.pattern.addedCount() <= 1) return countExtensionEmbeddings(host, q);
  return extensionSets(host, q).size();
}

/// (G~, H~) is (K,T)-maximal in gamma. gt lists V(G~) with the htCount
/// vertices of H~ first. T~ ranges over induced subgraphs on |V(T)| vertices
/// of G~ not contained in H~, under every numeration.
template <GraphLike G>
bool isKTMaximal(const G& gamma, std::span<const Vertex> gt, int htCount, const RootedPair& kt) {
  if (htCount < 0 || htCount > static_cast<int>(gt.size()))
    throw ArgumentError("H~ size " + std::to_string(htCount) + " does not fit in G~");
  detail::validateVertices(gamma, gt, "G~");
  const int t = kt.rootCount();
  const int g = static_cast<int>(gt.size());
  if (t > g) return true;

  std::vector<Vertex> outside;
  std::vector<Vertex> tilde(static_cast<std::size_t>(t));
  std::vector<int> pick(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) pick[i] = i;

  bool maximal = true;
  auto allow = [&](Vertex c) {
    if (std::find(gt.begin(), gt.end(), c) != gt.end()) return false;
    for (Vertex o : outside)
      if (gamma.adjacent(o, c)) return false;
    return true;
  };
  auto found = [&](std::span<const Vertex>) {
    maximal = false;
    return false;
  };
  while (true) {
    if (t > 0 && pick.back() >= htCount) {
      outside.clear();
      for (int i = 0, j = 0; i < g; ++i) {
        if (j < t && pick[j] == i) {
          ++j;
          continue;
        }
        outside.push_back(gt[i]);
      }
      for (int i = 0; i < t; ++i) tilde[i] = gt[pick[i]];
      std::sort(tilde.begin(), tilde.end());
      do {
        forEachExtension(gamma, kt, tilde, false, allow, found);
        if (!maximal) return false;
      } while (std::next_permutation(tilde.begin(), tilde.end()));
    }
    int i = t - 1;
    while (i >= 0 && pick[i] == g - t + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return maximal;
}

/// Sigma(r) patterns: pairs of the requested kind with at most tBound roots
/// and at most rBound added vertices. Safe is rejected.
std::vector<RootedPair> sigmaPatterns(PairKind kind, int rBound, int tBound, const Rational& alpha);

/// Strict extension sets W whose (G~, H~) is (K,T)-maximal for every pair in sigma.
template <GraphLike G>
std::uint64_t countMaximalExtensions(const G& host, const ExtensionQuery& q, const std::vector<RootedPair>& sigma) {
  ExtensionQuery strictQ = q;
  strictQ.strict = true;
  const int k = q.pattern.rootCount();
  std::uint64_t count = 0;
  std::vector<Vertex> gt(q.roots.begin(), q.roots.end());
  for (const auto& w : extensionSets(host, strictQ)) {
    gt.resize(static_cast<std::size_t>(k));
    gt.insert(gt.end(), w.begin(), w.end());
    bool ok = true;
    for (const RootedPair& kt : sigma)
      if (kt.rootCount() <= q.pattern.vertexCount() && !isKTMaximal(host, gt, k, kt)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

template <GraphLike G>
std::uint64_t countMaximalExtensions(const G& host, const ExtensionQuery& q, PairKind kind, int rBound, int tBound,
                                     const Rational& alpha) {
  return countMaximalExtensions(host, q, sigmaPatterns(kind, rBound, tBound, alpha));
}

/// Throws ArgumentError unless g is strictly balanced with density < 1/alpha.
void requireMaximalCopyHypotheses(const Graph& g, const Rational& alpha);

/// Vertex sets of the host inducing a copy of g that are (K,T)-maximal for every pair in sigma.
template <GraphLike G>
std::uint64_t countMaximalCopies(const Graph& g, const G& host, const Rational& alpha,
                                 const std::vector<RootedPair>& sigma) {
  requireMaximalCopyHypotheses(g, alpha);
  ExtensionQuery q{RootedPair(g, 0, {}), {}, true};
  return countMaximalExtensions(host, q, sigma);
}

template <GraphLike G>
std::uint64_t countMaximalCopies(const Graph& g, const G& host, const Rational& alpha, int rBound, int tBound) {
  requireMaximalCopyHypotheses(g, alpha);
  return countMaximalCopies(g, host, alpha, sigmaPatterns(PairKind::Neutral, rBound, tBound, alpha));
}

}  // namespace zol
