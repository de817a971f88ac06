#pragma once

#include "zol/formula.hpp"
#include "zol/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zol {

enum class Player { Spoiler, Duplicator };
std::string toString(Player p);

struct SpoilerMove {
  char graph = 'G';  // 'G' or 'H'
  Vertex vertex = 0;
  friend bool operator==(const SpoilerMove&, const SpoilerMove&) = default;
};

struct GameResult {
  Player winner = Player::Duplicator;
  std::optional<SpoilerMove> witness;  // least winning first move when Spoiler wins
};

/// Exhaustive solution of the i-round Ehrenfeucht game on (g, h). A vertex
/// picked again must be answered by its earlier partner.
GameResult solveGame(const Graph& g, const Graph& h, int rounds);

struct AgreementReport {
  Player winner = Player::Duplicator;
  int disagreeing = 0;                  // corpus sentences with different truth values
  std::vector<std::string> violations;  // sentences that disagree although Duplicator wins
};

/// Cross-checks the solver against sentence agreement. Every corpus formula
/// must be a sentence of depth at most `rounds`.
AgreementReport agreeOnDepth(const Graph& g, const Graph& h, int rounds, const std::vector<Formula>& corpus);

}  // namespace zol
