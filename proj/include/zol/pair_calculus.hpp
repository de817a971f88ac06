#pragma once

#include "zol/graph.hpp"
#include "zol/rational.hpp"
#include "zol/rooted_pair.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zol {

enum class PairKind { Safe, Rigid, Neutral };

std::string toString(PairKind kind);
PairKind parsePairKind(const std::string& text);

/// Flags that hold for a pair together with its exact f-value.
struct PairClass {
  bool safe = false;
  bool rigid = false;
  bool neutral = false;
  Rational f;

  bool has(PairKind kind) const;
  /// Lower-case names of the set flags, in the order safe, rigid, neutral.
  std::vector<std::string> names() const;
};

/// How the intermediate graphs S between H and G are quantified.
enum class SubgraphReading {
  VertexInduced,  // S = G restricted to roots plus a subset of the added vertices
  AllSubgraphs,   // every S with H <= S <= G, edge deletions included
};

/// f_alpha(G,H) = v(G,H) - alpha * e(G,H).
Rational fValue(const RootedPair& p, const Rational& alpha);
/// f(G) = v(G) - alpha * e(G).
Rational fValue(const Graph& g, const Rational& alpha);

/// Evaluates the safe / rigid / neutral definitions exhaustively.
/// Requires k < l and alpha > 0.
PairClass classifyPair(const RootedPair& p, const Rational& alpha,
                       SubgraphReading reading = SubgraphReading::VertexInduced);

/// Witness of an alpha-neutral chain H = K_1 < K_2 < ... < K_r = G.
/// blocks[i] = V(K_{i+2}) \ V(K_{i+1}); anchors[i] = V(T_{i+1}), the vertices
/// of K_{i+1} the block attaches to. Masks are over the vertices of G.
struct NeutralChain {
  std::vector<std::uint64_t> blocks;
  std::vector<std::uint64_t> anchors;
};

/// Searches for a chain decomposition of (G, G|base). Exponential in the
/// number of non-base vertices; meant for small increments.
std::optional<NeutralChain> findNeutralChain(const Graph& g, std::uint64_t base, const Rational& alpha);
bool isNeutralChain(const Graph& g, std::uint64_t base, const Rational& alpha);

/// Checks a witness directly against the three chain conditions.
bool verifyNeutralChain(const Graph& g, std::uint64_t base, const NeutralChain& chain, const Rational& alpha);

/// The pair (G|(anchors+block), G|anchors) with anchors listed first.
RootedPair incrementPair(const Graph& g, std::uint64_t anchors, std::uint64_t block);

struct EnumerationLimits {
  int maxRoots = 5;
  int maxAdded = 3;
  std::size_t maxPairs = 200000;

  /// Defaults overridden by ZOL_ENUM_MAX_ROOTS, ZOL_ENUM_MAX_ADDED, ZOL_ENUM_MAX_PAIRS.
  static EnumerationLimits fromEnvironment();
};

/// All pairs of the requested kind with 1..maxRoots roots and 1..maxAdded
/// added vertices, one representative per class of pairs that agree on E(H)
/// and on E(G) \ E(H) up to a permutation of the added vertices. Sorted by
/// (l, k, edge listing). Throws RefusalError beyond the limits.
std::vector<RootedPair> enumeratePairs(int maxRoots, int maxAdded, const Rational& alpha, PairKind wanted,
                                       const EnumerationLimits& limits = EnumerationLimits::fromEnvironment());

/// Same classification, but one representative per pairIsomorphic class with
/// edgeless H and no new root-root edge. These are exactly the patterns that
/// matter for extension and maximality checks.
std::vector<RootedPair> enumerateExtenderPatterns(int maxRoots, int maxAdded, const Rational& alpha, PairKind wanted,
                                                  const EnumerationLimits& limits = EnumerationLimits::fromEnvironment());

}  // namespace zol
