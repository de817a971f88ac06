#include "zol/ef_game.hpp"

#include "zol/errors.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace zol {

std::string toString(Player p) { return p == Player::Spoiler ? "spoiler" : "duplicator"; }

namespace {

// Positions are identified by the set of distinct chosen pairs: repeated
// choices add nothing, and the order of the pairs does not matter for the
// remaining play.
class GameSolver {
 public:
  GameSolver(const Graph& g, const Graph& h) : g_(g), h_(h) {}

  bool duplicatorWins(std::vector<std::pair<Vertex, Vertex>>& pairs, int rounds) {
    if (rounds == 0) return true;
    std::string key = encode(pairs, rounds);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = !firstSpoilerWin(pairs, rounds).has_value();
    memo_.emplace(std::move(key), result);
    return result;
  }

  // Least Spoiler move after which Duplicator has no good answer.
  std::optional<SpoilerMove> firstSpoilerWin(std::vector<std::pair<Vertex, Vertex>>& pairs, int rounds) {
    for (Vertex x = 0; x < g_.vertexCount(); ++x)
      if (!canAnswer(pairs, rounds, x, true)) return SpoilerMove{'G', x};
    for (Vertex y = 0; y < h_.vertexCount(); ++y)
      if (!canAnswer(pairs, rounds, y, false)) return SpoilerMove{'H', y};
    return std::nullopt;
  }

 private:
  bool canAnswer(std::vector<std::pair<Vertex, Vertex>>& pairs, int rounds, Vertex pick, bool inG) {
    for (const auto& [a, b] : pairs)
      if ((inG ? a : b) == pick) return duplicatorWins(pairs, rounds - 1);
    const Graph& mine = inG ? g_ : h_;
    const Graph& other = inG ? h_ : g_;
    std::uint64_t used = 0;
    std::uint64_t want = 0;
    std::uint64_t care = 0;
    for (const auto& [a, b] : pairs) {
      const Vertex here = inG ? a : b;
      const Vertex there = inG ? b : a;
      used |= bit(there);
      care |= bit(there);
      if (mine.adjacent(pick, here)) want |= bit(there);
    }
    for (Vertex r = 0; r < other.vertexCount(); ++r) {
      if (used & bit(r)) continue;
      if ((other.row(r) & care) != want) continue;
      pairs.emplace_back(inG ? pick : r, inG ? r : pick);
      const bool ok = duplicatorWins(pairs, rounds - 1);
      pairs.pop_back();
      if (ok) return true;
    }
    return false;
  }

  static std::string encode(std::vector<std::pair<Vertex, Vertex>> pairs, int rounds) {
    std::sort(pairs.begin(), pairs.end());
    std::string key(1, static_cast<char>(rounds));
    for (const auto& [a, b] : pairs) {
      key += static_cast<char>(a);
      key += static_cast<char>(b);
    }
    return key;
  }

  const Graph& g_;
  const Graph& h_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

GameResult solveGame(const Graph& g, const Graph& h, int rounds) {
  if (rounds < 0) throw ArgumentError("rounds must be nonnegative");
  GameSolver solver(g, h);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  GameResult result;
  if (rounds == 0) return result;
  result.witness = solver.firstSpoilerWin(pairs, rounds);
  result.winner = result.witness ? Player::Spoiler : Player::Duplicator;
  return result;
}

AgreementReport agreeOnDepth(const Graph& g, const Graph& h, int rounds, const std::vector<Formula>& corpus) {
  for (const auto& f : corpus) {
    if (!isSentence(f)) throw ArgumentError("corpus formula '" + toString(f) + "' has free variables");
    if (quantifierDepth(f) > rounds)
      throw ArgumentError("corpus formula '" + toString(f) + "' has depth " + std::to_string(quantifierDepth(f)) +
                          " > " + std::to_string(rounds));
  }
  AgreementReport report;
  report.winner = solveGame(g, h, rounds).winner;
  for (const auto& f : corpus) {
    Evaluator eval(f);
    if (eval(g) != eval(h)) {
      ++report.disagreeing;
      if (report.winner == Player::Duplicator) report.violations.push_back(toString(f));
    }
  }
  return report;
}

}  // namespace zol
