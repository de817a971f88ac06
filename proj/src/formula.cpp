#include "zol/formula.hpp"

#include <algorithm>

namespace zol {

namespace {

Formula make(NodeKind kind, std::vector<Formula> children, std::string var = {}) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->var = std::move(var);
  for (const auto& c : children) n->depth = std::max(n->depth, c->depth);
  if (kind == NodeKind::Forall || kind == NodeKind::Exists) ++n->depth;
  n->children = std::move(children);
  return n;
}

Formula atom(NodeKind kind, const std::string& a, const std::string& b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = a;
  n->rhs = b;
  return n;
}

bool isQuantifier(const Node& n) { return n.kind == NodeKind::Forall || n.kind == NodeKind::Exists; }

const char* opText(NodeKind k) {
  switch (k) {
    case NodeKind::And: return " & ";
    case NodeKind::Or: return " | ";
    case NodeKind::Implies: return " -> ";
    case NodeKind::Iff: return " <-> ";
    default: return "";
  }
}

void print(const Node& n, std::string& out);

void printOperand(const Node& n, std::string& out) {
  if (isQuantifier(n)) {
    out += '(';
    print(n, out);
    out += ')';
  } else {
    print(n, out);
  }
}

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Adj: out += n.lhs + "~" + n.rhs; return;
    case NodeKind::Eq: out += n.lhs + "=" + n.rhs; return;
    case NodeKind::Not:
      out += '!';
      printOperand(*n.children[0], out);
      return;
    case NodeKind::Forall:
    case NodeKind::Exists:
      out += n.kind == NodeKind::Forall ? "A " : "E ";
      out += n.var + ". ";
      print(*n.children[0], out);
      return;
    default:
      out += '(';
      printOperand(*n.children[0], out);
      out += opText(n.kind);
      printOperand(*n.children[1], out);
      out += ')';
  }
}

void collectFree(const Node& n, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto see = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
  };
  switch (n.kind) {
    case NodeKind::Adj:
    case NodeKind::Eq:
      see(n.lhs);
      see(n.rhs);
      return;
    case NodeKind::Forall:
    case NodeKind::Exists:
      bound.push_back(n.var);
      collectFree(*n.children[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& c : n.children) collectFree(*c, bound, out);
  }
}

using Binding = std::vector<std::pair<std::string, std::string>>;

bool sameVariable(const std::string& a, const std::string& b, const Binding& env) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    const bool ma = it->first == a;
    const bool mb = it->second == b;
    if (ma || mb) return ma && mb;
  }
  return a == b;
}

bool alphaEq(const Node& a, const Node& b, Binding& env) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Adj:
    case NodeKind::Eq:
      return sameVariable(a.lhs, b.lhs, env) && sameVariable(a.rhs, b.rhs, env);
    case NodeKind::Forall:
    case NodeKind::Exists: {
      env.emplace_back(a.var, b.var);
      const bool ok = alphaEq(*a.children[0], *b.children[0], env);
      env.pop_back();
      return ok;
    }
    default:
      if (a.children.size() != b.children.size()) return false;
      for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!alphaEq(*a.children[i], *b.children[i], env)) return false;
      return true;
  }
}

}  // namespace

Formula forall(const std::string& var, Formula body) { return make(NodeKind::Forall, {std::move(body)}, var); }
Formula exists(const std::string& var, Formula body) { return make(NodeKind::Exists, {std::move(body)}, var); }
Formula negate(Formula f) { return make(NodeKind::Not, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return make(NodeKind::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return make(NodeKind::Or, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) { return make(NodeKind::Implies, {std::move(a), std::move(b)}); }
Formula iff(Formula a, Formula b) { return make(NodeKind::Iff, {std::move(a), std::move(b)}); }
Formula adj(const std::string& a, const std::string& b) { return atom(NodeKind::Adj, a, b); }
Formula eq(const std::string& a, const std::string& b) { return atom(NodeKind::Eq, a, b); }

int quantifierDepth(const Formula& f) { return f->depth; }

bool inClassLk(const Formula& f, int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  return f->depth <= k;
}

std::set<std::string> freeVariables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collectFree(*f, bound, out);
  return out;
}

bool isSentence(const Formula& f) { return freeVariables(f).empty(); }

std::string toString(const Formula& f) {
  std::string out;
  print(*f, out);
  return out;
}

bool alphaEquivalent(const Formula& a, const Formula& b) {
  Binding env;
  return alphaEq(*a, *b, env);
}

ParseError::ParseError(const std::string& message, std::size_t column)
    : ArgumentError("parse error at column " + std::to_string(column) + ": " + message), column_(column) {}

Formula randomFormula(std::mt19937_64& rng, const RandomFormulaOptions& options) {
  if (options.variables < 1 || options.maxDepth < 0) throw ArgumentError("invalid random formula options");
  if (options.sentence && options.maxDepth < 1) throw ArgumentError("a random sentence needs depth at least 1");
  std::vector<std::string> pool;
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  for (int i = 0; i < options.variables; ++i)
    pool.push_back(i < 6 ? names[i] : "x" + std::to_string(i));

  std::vector<std::string> scope;
  if (!options.sentence) {
    const int freeCount = std::min<int>(2, options.variables);
    for (int i = 0; i < freeCount; ++i) scope.push_back(pool[options.variables - 1 - i]);
  }
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };

  auto gen = [&](auto&& self, int depth, int size) -> Formula {
    std::vector<std::string> fresh;
    for (const auto& v : pool)
      if (std::find(scope.begin(), scope.end(), v) == scope.end()) fresh.push_back(v);
    const bool canQuantify = depth > 0 && !fresh.empty();
    if (scope.empty() || (size <= 1 && !canQuantify) || (size <= 1 && pick(2) == 0)) {
      if (scope.empty()) {
        const std::string v = fresh[pick(static_cast<int>(fresh.size()))];
        scope.push_back(v);
        Formula body = self(self, depth - 1, size - 1);
        scope.pop_back();
        return pick(2) ? exists(v, body) : forall(v, body);
      }
      const std::string& a = scope[pick(static_cast<int>(scope.size()))];
      const std::string& b = scope[pick(static_cast<int>(scope.size()))];
      return pick(4) == 0 ? eq(a, b) : adj(a, b);
    }
    const int choice = pick(canQuantify ? 8 : 5);
    if (choice >= 5) {
      const std::string v = fresh[pick(static_cast<int>(fresh.size()))];
      scope.push_back(v);
      Formula body = self(self, depth - 1, size - 1);
      scope.pop_back();
      return choice == 7 ? forall(v, body) : exists(v, body);
    }
    if (choice == 0) return negate(self(self, depth, size - 1));
    const int left = 1 + pick(std::max(1, size - 2));
    Formula a = self(self, depth, left);
    Formula b = self(self, depth, std::max(1, size - 1 - left));
    switch (choice) {
      case 1: return conj(a, b);
      case 2: return disj(a, b);
      case 3: return implies(a, b);
      default: return iff(a, b);
    }
  };
  return gen(gen, options.maxDepth, options.maxSize);
}

}  // namespace zol
