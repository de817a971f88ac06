#pragma once

#include "zol/errors.hpp"
#include "zol/graph.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace zol {

enum class NodeKind { Forall, Exists, Not, And, Or, Implies, Iff, Adj, Eq };

struct Node;
using Formula = std::shared_ptr<const Node>;

/// Immutable AST node. Quantifiers use `var`; atoms use `lhs`, `rhs`.
struct Node {
  NodeKind kind;
  std::string var;
  std::string lhs;
  std::string rhs;
  std::vector<Formula> children;
  int depth = 0;  // quantifier depth of this subformula
};

Formula forall(const std::string& var, Formula body);
Formula exists(const std::string& var, Formula body);
Formula negate(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula adj(const std::string& a, const std::string& b);
Formula eq(const std::string& a, const std::string& b);

int quantifierDepth(const Formula& f);
bool inClassLk(const Formula& f, int k);
std::set<std::string> freeVariables(const Formula& f);
bool isSentence(const Formula& f);

/// Concrete syntax accepted by parse; binary subformulas are parenthesized.
std::string toString(const Formula& f);

/// Equal up to consistent renaming of bound variables.
bool alphaEquivalent(const Formula& a, const Formula& b);

class ParseError : public ArgumentError {
 public:
  ParseError(const std::string& message, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Quantifiers `A x.`, `forall x.`, `E x.`, `exists x.` (bodies extend as far
/// as possible); atoms `x~y`, `x=y`; connectives by decreasing precedence
/// `!`, `&`, `|`, `->`, `<->`, the last two right-associative. Rebinding a
/// variable inside its own scope is rejected.
Formula parse(const std::string& text);

using Assignment = std::map<std::string, Vertex>;

/// Tarskian truth over the vertices of g. Throws ArgumentError naming an
/// unbound free variable or an out-of-range assignment.
template <GraphLike G>
bool evaluate(const G& g, const Formula& f, const Assignment& assignment = {});

/// Compiled form for evaluating one formula on many graphs.
class Evaluator {
 public:
  explicit Evaluator(const Formula& f);
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  template <GraphLike G>
  bool operator()(const G& g, const Assignment& assignment = {}) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct RandomFormulaOptions {
  int maxDepth = 3;
  int variables = 5;         // size of the variable pool
  int maxSize = 12;          // rough bound on connective and atom count
  bool sentence = true;      // otherwise up to two pool variables may stay free
};

/// Random formula drawn from a fixed recursive grammar; never shadows.
Formula randomFormula(std::mt19937_64& rng, const RandomFormulaOptions& options = {});

}  // namespace zol
