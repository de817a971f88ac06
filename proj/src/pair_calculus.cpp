#include "zol/pair_calculus.hpp"

#include "zol/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace zol {

std::string toString(PairKind kind) {
  switch (kind) {
    case PairKind::Safe: return "safe";
    case PairKind::Rigid: return "rigid";
    case PairKind::Neutral: return "neutral";
  }
  return "?";
}

PairKind parsePairKind(const std::string& text) {
  if (text == "safe") return PairKind::Safe;
  if (text == "rigid") return PairKind::Rigid;
  if (text == "neutral") return PairKind::Neutral;
  throw ArgumentError("unknown pair class '" + text + "' (expected safe, rigid or neutral)");
}

bool PairClass::has(PairKind kind) const {
  switch (kind) {
    case PairKind::Safe: return safe;
    case PairKind::Rigid: return rigid;
    case PairKind::Neutral: return neutral;
  }
  return false;
}

std::vector<std::string> PairClass::names() const {
  std::vector<std::string> out;
  if (safe) out.emplace_back("safe");
  if (rigid) out.emplace_back("rigid");
  if (neutral) out.emplace_back("neutral");
  return out;
}

namespace {

void requirePositive(const Rational& alpha) {
  if (alpha.sign() <= 0) throw DomainError("alpha must be positive, got " + alpha.str());
}

// alpha = num/den with small integer parts; sign of (den*v - num*e).
struct Alpha {
  std::int64_t num;
  std::int64_t den;

  explicit Alpha(const Rational& a)
      : num(a.numerator().convert_to<std::int64_t>()), den(a.denominator().convert_to<std::int64_t>()) {}

  int fSign(std::int64_t v, std::int64_t e) const {
    const std::int64_t x = den * v - num * e;
    return (x > 0) - (x < 0);
  }
};

bool everyRootHasAddedNeighbor(const RootedPair& p) {
  const std::uint64_t roots = p.rootMask();
  for (Vertex x = 0; x < p.rootCount(); ++x)
    if ((p.graph().row(x) & ~roots) == 0) return false;
  return true;
}

PairClass classifyVertexInduced(const RootedPair& p, const Alpha& alpha) {
  const Graph& g = p.graph();
  const int k = p.rootCount();
  const int a = p.addedCount();
  const std::uint64_t roots = p.rootMask();
  const std::int64_t hEdges = static_cast<std::int64_t>(p.rootEdges().size());
  const std::int64_t newRoot = g.edgesWithin(roots) - hEdges;
  const std::int64_t newTotal = p.newEdgeCount();
  const std::uint64_t allAdded = fullMask(a);

  PairClass cls;
  cls.safe = true;
  cls.rigid = true;
  bool neutralInterior = true;
  for (std::uint64_t x = 0; x <= allAdded; ++x) {
    const std::int64_t size = std::popcount(x);
    const std::int64_t eNew = g.edgesWithin(roots | (x << k)) - hEdges;
    const bool isH = x == 0 && newRoot == 0;
    const bool isG = x == allAdded;
    const int fAbove = alpha.fSign(size, eNew);                  // f(S,H)
    const int fBelow = alpha.fSign(a - size, newTotal - eNew);   // f(G,S)
    if (!isH && fAbove <= 0) cls.safe = false;
    if (!isG && fBelow >= 0) cls.rigid = false;
    if (!isH && !isG && fAbove <= 0) neutralInterior = false;
  }
  cls.neutral = neutralInterior && alpha.fSign(a, newTotal) == 0 && everyRootHasAddedNeighbor(p);
  return cls;
}

PairClass classifyAllSubgraphs(const RootedPair& p, const Alpha& alpha) {
  const Graph& g = p.graph();
  const int k = p.rootCount();
  const int a = p.addedCount();
  const auto newEdges = p.newEdges();
  if (newEdges.size() > 24) throw RefusalError("all-subgraph classification limited to 24 new edges");
  const std::int64_t newTotal = static_cast<std::int64_t>(newEdges.size());
  const std::uint64_t allAdded = fullMask(a);

  PairClass cls;
  cls.safe = true;
  cls.rigid = true;
  bool neutralInterior = true;
  for (std::uint64_t x = 0; x <= allAdded; ++x) {
    const std::uint64_t vertices = p.rootMask() | (x << k);
    std::vector<int> inside;
    for (int i = 0; i < static_cast<int>(newEdges.size()); ++i)
      if ((vertices & bit(newEdges[i].u)) && (vertices & bit(newEdges[i].v))) inside.push_back(i);
    const std::uint64_t subsets = std::uint64_t{1} << inside.size();
    for (std::uint64_t sub = 0; sub < subsets; ++sub) {
      const std::int64_t size = std::popcount(x);
      const std::int64_t e = std::popcount(sub);
      const bool isH = x == 0 && e == 0;
      const bool isG = x == allAdded && e == newTotal;
      const int fAbove = alpha.fSign(size, e);
      const int fBelow = alpha.fSign(a - size, newTotal - e);
      if (!isH && fAbove <= 0) cls.safe = false;
      if (!isG && fBelow >= 0) cls.rigid = false;
      if (!isH && !isG && fAbove <= 0) neutralInterior = false;
    }
  }
  (void)g;
  cls.neutral = neutralInterior && alpha.fSign(a, newTotal) == 0 && everyRootHasAddedNeighbor(p);
  return cls;
}

}  // namespace

Rational fValue(const RootedPair& p, const Rational& alpha) {
  requirePositive(alpha);
  return Rational(p.addedCount()) - alpha * Rational(p.newEdgeCount());
}

Rational fValue(const Graph& g, const Rational& alpha) {
  requirePositive(alpha);
  return Rational(g.vertexCount()) - alpha * Rational(static_cast<std::int64_t>(g.edgeCount()));
}

PairClass classifyPair(const RootedPair& p, const Rational& alpha, SubgraphReading reading) {
  requirePositive(alpha);
  if (p.degenerate()) throw ArgumentError("classification needs k < l (H a proper subgraph of G)");
  Alpha al(alpha);
  PairClass cls = reading == SubgraphReading::VertexInduced ? classifyVertexInduced(p, al) : classifyAllSubgraphs(p, al);
  cls.f = fValue(p, alpha);
  return cls;
}

RootedPair incrementPair(const Graph& g, std::uint64_t anchors, std::uint64_t block) {
  std::vector<Vertex> order;
  for (std::uint64_t m = anchors; m; m &= m - 1) order.push_back(std::countr_zero(m));
  for (std::uint64_t m = block & ~anchors; m; m &= m - 1) order.push_back(std::countr_zero(m));
  return RootedPair::induced(inducedSubgraph(g, order), std::popcount(anchors));
}

namespace {

std::uint64_t neighborhoodIn(const Graph& g, std::uint64_t block, std::uint64_t within) {
  std::uint64_t out = 0;
  for (std::uint64_t m = block; m; m &= m - 1) out |= g.row(std::countr_zero(m));
  return out & within;
}

class ChainSearch {
 public:
  ChainSearch(const Graph& g, const Rational& alpha) : g_(g), alpha_(alpha) {}

  bool solvable(std::uint64_t remaining) {
    if (remaining == 0) return true;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second != 0;
    const std::uint64_t current = fullMask(g_.vertexCount()) & ~remaining;
    std::uint64_t found = 0;
    for (std::uint64_t block = remaining; block; block = (block - 1) & remaining) {
      const std::uint64_t anchors = neighborhoodIn(g_, block, current);
      if (!classifyPair(incrementPair(g_, anchors, block), alpha_).neutral) continue;
      if (solvable(remaining & ~block)) {
        found = block;
        break;
      }
    }
    memo_[remaining] = found;
    return found != 0;
  }

  NeutralChain witness(std::uint64_t remaining) const {
    NeutralChain chain;
    while (remaining) {
      const std::uint64_t current = fullMask(g_.vertexCount()) & ~remaining;
      const std::uint64_t block = memo_.at(remaining);
      chain.blocks.push_back(block);
      chain.anchors.push_back(neighborhoodIn(g_, block, current));
      remaining &= ~block;
    }
    return chain;
  }

 private:
  const Graph& g_;
  const Rational& alpha_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

}  // namespace

std::optional<NeutralChain> findNeutralChain(const Graph& g, std::uint64_t base, const Rational& alpha) {
  requirePositive(alpha);
  const std::uint64_t all = fullMask(g.vertexCount());
  if (base & ~all) throw ArgumentError("base vertex set not contained in G");
  ChainSearch search(g, alpha);
  const std::uint64_t remaining = all & ~base;
  if (!search.solvable(remaining)) return std::nullopt;
  return search.witness(remaining);
}

bool isNeutralChain(const Graph& g, std::uint64_t base, const Rational& alpha) {
  return findNeutralChain(g, base, alpha).has_value();
}

bool verifyNeutralChain(const Graph& g, std::uint64_t base, const NeutralChain& chain, const Rational& alpha) {
  if (chain.blocks.size() != chain.anchors.size()) return false;
  std::uint64_t current = base;
  for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
    const std::uint64_t block = chain.blocks[i];
    const std::uint64_t anchors = chain.anchors[i];
    if (block == 0 || (block & current) || (anchors & ~current)) return false;
    if (neighborhoodIn(g, block, current & ~anchors) != 0) return false;
    if (!classifyPair(incrementPair(g, anchors, block), alpha).neutral) return false;
    current |= block;
  }
  return current == fullMask(g.vertexCount());
}

EnumerationLimits EnumerationLimits::fromEnvironment() {
  EnumerationLimits limits;
  auto read = [](const char* name, auto& field) {
    if (const char* v = std::getenv(name)) {
      try {
        field = static_cast<std::remove_reference_t<decltype(field)>>(std::stoll(v));
      } catch (const std::exception&) {
        throw ArgumentError(std::string("malformed environment variable ") + name);
      }
    }
  };
  read("ZOL_ENUM_MAX_ROOTS", limits.maxRoots);
  read("ZOL_ENUM_MAX_ADDED", limits.maxAdded);
  read("ZOL_ENUM_MAX_PAIRS", limits.maxPairs);
  return limits;
}

namespace {

// Cross patterns: edges between roots and added vertices and among added
// vertices, one representative per orbit of added-vertex permutations.
class CrossPatterns {
 public:
  CrossPatterns(int k, int a) : k_(k), a_(a) {
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < a; ++j) slots_.emplace_back(r, k + j);
    for (int i = 0; i < a; ++i)
      for (int j = i + 1; j < a; ++j) slots_.emplace_back(k + i, k + j);
    std::vector<int> perm(static_cast<std::size_t>(a));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> image;
      for (const Edge& e : slots_) {
        auto map = [&](Vertex v) { return v < k ? v : k + perm[v - k]; };
        Edge m(map(e.u), map(e.v));
        image.push_back(static_cast<int>(std::find(slots_.begin(), slots_.end(), m) - slots_.begin()));
      }
      perms_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  int slotCount() const { return static_cast<int>(slots_.size()); }

  bool isCanonical(std::uint64_t mask) const {
    for (const auto& image : perms_) {
      std::uint64_t mapped = 0;
      for (std::uint64_t m = mask; m; m &= m - 1) mapped |= bit(image[std::countr_zero(m)]);
      if (mapped < mask) return false;
    }
    return true;
  }

  std::vector<Edge> edges(std::uint64_t mask) const {
    std::vector<Edge> out;
    for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(slots_[std::countr_zero(m)]);
    return out;
  }

  int vertexCount() const { return k_ + a_; }

 private:
  int k_;
  int a_;
  std::vector<Edge> slots_;
  std::vector<std::vector<int>> perms_;
};

void checkBounds(int maxRoots, int maxAdded, const EnumerationLimits& limits) {
  if (maxRoots < 1 || maxAdded < 1) throw ArgumentError("enumeration bounds must be at least 1");
  if (maxRoots > limits.maxRoots || maxAdded > limits.maxAdded)
    throw RefusalError("enumeration bounds (" + std::to_string(maxRoots) + " roots, " + std::to_string(maxAdded) +
                       " added) exceed the configured ceiling (" + std::to_string(limits.maxRoots) + ", " +
                       std::to_string(limits.maxAdded) + ")");
  if (maxRoots + maxAdded > kDenseVertexLimit) throw RefusalError("enumeration exceeds dense vertex limit");
}

template <class Visit>
void forEachClassifiedPattern(int maxRoots, int maxAdded, const Rational& alpha, PairKind wanted, Visit&& visit) {
  for (int k = 1; k <= maxRoots; ++k)
    for (int a = 1; a <= maxAdded; ++a) {
      CrossPatterns patterns(k, a);
      if (patterns.slotCount() > 30) throw RefusalError("cross-pattern space too large to enumerate");
      const std::uint64_t total = std::uint64_t{1} << patterns.slotCount();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!patterns.isCanonical(mask)) continue;
        auto es = patterns.edges(mask);
        RootedPair p(Graph(patterns.vertexCount(), es), k, {});
        if (classifyPair(p, alpha).has(wanted)) visit(p, patterns, mask);
      }
    }
}

std::string listingKey(const RootedPair& p) {
  std::string s;
  for (const Edge& e : p.rootEdges()) s += "h" + std::to_string(e.u) + "," + std::to_string(e.v) + ";";
  for (const Edge& e : p.newEdges()) s += "g" + std::to_string(e.u) + "," + std::to_string(e.v) + ";";
  return s;
}

void sortListing(std::vector<RootedPair>& pairs) {
  std::vector<std::pair<std::tuple<int, int, std::string>, std::size_t>> keys;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    keys.push_back({{pairs[i].vertexCount(), pairs[i].rootCount(), listingKey(pairs[i])}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<RootedPair> sorted;
  sorted.reserve(pairs.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(pairs[i]));
  pairs = std::move(sorted);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

std::vector<RootedPair> enumerateExtenderPatterns(int maxRoots, int maxAdded, const Rational& alpha, PairKind wanted,
                                                  const EnumerationLimits& limits) {
  requirePositive(alpha);
  checkBounds(maxRoots, maxAdded, limits);
  std::vector<RootedPair> out;
  forEachClassifiedPattern(maxRoots, maxAdded, alpha, wanted, [&](const RootedPair& p, auto&, std::uint64_t) {
    if (out.size() >= limits.maxPairs) throw RefusalError("enumeration exceeds the configured pair ceiling");
    out.push_back(p);
  });
  sortListing(out);
  return out;
}

std::vector<RootedPair> enumeratePairs(int maxRoots, int maxAdded, const Rational& alpha, PairKind wanted,
                                       const EnumerationLimits& limits) {
  requirePositive(alpha);
  checkBounds(maxRoots, maxAdded, limits);
  std::vector<RootedPair> out;
  // Classification ignores E(H). A new root-root edge lies inside every
  // intermediate S of the rigid test, and makes f(S,H) < 0 for S = G|roots in
  // the safe and neutral tests; so rigid patterns take every root-pair state
  // (absent, in H, new) and the other kinds only absent / in H.
  forEachClassifiedPattern(maxRoots, maxAdded, alpha, wanted, [&](const RootedPair& p, auto&, std::uint64_t) {
    const int k = p.rootCount();
    std::vector<Edge> rootPairs;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) rootPairs.emplace_back(u, v);
    const int states = wanted == PairKind::Rigid ? 3 : 2;
    const std::uint64_t variants = ipow(states, static_cast<int>(rootPairs.size()));
    if (out.size() + variants > limits.maxPairs) throw RefusalError("enumeration exceeds the configured pair ceiling");
    const auto cross = p.graph().edges();
    for (std::uint64_t code = 0; code < variants; ++code) {
      std::vector<Edge> all = cross;
      std::vector<Edge> h;
      std::uint64_t c = code;
      for (const Edge& e : rootPairs) {
        const auto state = c % states;
        c /= states;
        if (state == 1) h.push_back(e);
        if (state != 0) all.push_back(e);
      }
      out.emplace_back(Graph(p.vertexCount(), all), k, h);
    }
  });
  sortListing(out);
  return out;
}

}  // namespace zol
