#include "zol/formula.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace zol {

namespace {

enum class Guard { None, Neighbors, Equal };

struct CNode {
  NodeKind kind;
  int a = -1;  // atom lhs slot, or the quantified slot
  int b = -1;  // atom rhs slot
  std::vector<int> kids;
  std::vector<int> freeSlots;
  Guard guard = Guard::None;
  int guardSlot = -1;
  int memo = -1;  // memo table index, -1 when not memoized
};

}  // namespace

struct Evaluator::Impl {
  std::vector<CNode> nodes;
  int root = 0;
  std::vector<std::string> slotNames;
  std::vector<int> freeSlots;  // slots of the formula's free variables
  int memoTables = 0;

  int slotOf(const std::string& name) {
    auto it = std::find(slotNames.begin(), slotNames.end(), name);
    if (it != slotNames.end()) return static_cast<int>(it - slotNames.begin());
    slotNames.push_back(name);
    return static_cast<int>(slotNames.size()) - 1;
  }

  static void mergeInto(std::vector<int>& dst, const std::vector<int>& src) {
    for (int s : src)
      if (std::find(dst.begin(), dst.end(), s) == dst.end()) dst.push_back(s);
  }

  void flatten(const Formula& f, NodeKind kind, std::vector<Formula>& out) {
    if (f->kind == kind) {
      for (const auto& c : f->children) flatten(c, kind, out);
    } else {
      out.push_back(f);
    }
  }

  int compile(const Formula& f, std::vector<int>& scope) {
    CNode n;
    n.kind = f->kind;
    switch (f->kind) {
      case NodeKind::Adj:
      case NodeKind::Eq:
        n.a = slotOf(f->lhs);
        n.b = slotOf(f->rhs);
        n.freeSlots = {n.a};
        mergeInto(n.freeSlots, {n.b});
        break;
      case NodeKind::Forall:
      case NodeKind::Exists: {
        n.a = slotOf(f->var);
        scope.push_back(n.a);
        n.kids.push_back(compile(f->children[0], scope));
        scope.pop_back();
        for (int s : nodes[n.kids[0]].freeSlots)
          if (s != n.a) n.freeSlots.push_back(s);
        detectGuard(n);
        if (n.freeSlots.size() < scope.size()) n.memo = memoTables++;
        break;
      }
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<Formula> parts;
        flatten(f, f->kind, parts);
        for (const auto& p : parts) {
          n.kids.push_back(compile(p, scope));
          mergeInto(n.freeSlots, nodes[n.kids.back()].freeSlots);
        }
        break;
      }
      default:
        for (const auto& c : f->children) {
          n.kids.push_back(compile(c, scope));
          mergeInto(n.freeSlots, nodes[n.kids.back()].freeSlots);
        }
    }
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  // An atom var~t or var=t (t another variable, not bound further in) that
  // restricts the candidates.
  bool atomGuard(const CNode& atom, int var, const std::vector<int>& inner, Guard& guard, int& slot) const {
    if (atom.kind != NodeKind::Adj && atom.kind != NodeKind::Eq) return false;
    int other;
    if (atom.a == var && atom.b != var) other = atom.b;
    else if (atom.b == var && atom.a != var) other = atom.a;
    else return false;
    if (std::find(inner.begin(), inner.end(), other) != inner.end()) return false;
    guard = atom.kind == NodeKind::Adj ? Guard::Neighbors : Guard::Equal;
    slot = other;
    return true;
  }

  bool conjunctGuard(int idx, int var, const std::vector<int>& inner, Guard& guard, int& slot) const {
    const CNode& c = nodes[idx];
    if (c.kind == NodeKind::And) {
      for (int k : c.kids)
        if (atomGuard(nodes[k], var, inner, guard, slot)) return true;
      return false;
    }
    return atomGuard(c, var, inner, guard, slot);
  }

  // E v. E w... (conj) and A v. A w... (conj -> _), A v. A w... !(conj): a
  // conjunct atom tying v to an outer variable holds for every witness, so it
  // can restrict v even through the inner quantifiers of the same kind.
  void detectGuard(CNode& q) const {
    std::vector<int> inner;
    int bodyIdx = q.kids[0];
    while (nodes[bodyIdx].kind == q.kind) {
      inner.push_back(nodes[bodyIdx].a);
      bodyIdx = nodes[bodyIdx].kids[0];
    }
    const CNode& body = nodes[bodyIdx];
    Guard g = Guard::None;
    int s = -1;
    bool found = false;
    if (q.kind == NodeKind::Exists) {
      found = conjunctGuard(bodyIdx, q.a, inner, g, s);
    } else if (body.kind == NodeKind::Implies || body.kind == NodeKind::Not) {
      found = conjunctGuard(body.kids[0], q.a, inner, g, s);
    } else if (body.kind == NodeKind::Or) {
      for (int k : body.kids)
        if (nodes[k].kind == NodeKind::Not && atomGuard(nodes[nodes[k].kids[0]], q.a, inner, g, s)) {
          found = true;
          break;
        }
    }
    if (found) {
      q.guard = g;
      q.guardSlot = s;
    }
  }

  template <GraphLike G>
  struct Run {
    const Impl& impl;
    const G& g;
    std::vector<Vertex> values;
    std::vector<std::unordered_map<std::uint64_t, bool>> memo;
    int bits;

    bool eval(int idx) {
      const CNode& n = impl.nodes[idx];
      switch (n.kind) {
        case NodeKind::Adj: return values[n.a] != values[n.b] && g.adjacent(values[n.a], values[n.b]);
        case NodeKind::Eq: return values[n.a] == values[n.b];
        case NodeKind::Not: return !eval(n.kids[0]);
        case NodeKind::And:
          for (int k : n.kids)
            if (!eval(k)) return false;
          return true;
        case NodeKind::Or:
          for (int k : n.kids)
            if (eval(k)) return true;
          return false;
        case NodeKind::Implies: return !eval(n.kids[0]) || eval(n.kids[1]);
        case NodeKind::Iff: return eval(n.kids[0]) == eval(n.kids[1]);
        case NodeKind::Forall:
        case NodeKind::Exists: return quantifier(n);
      }
      return false;
    }

    bool quantifier(const CNode& n) {
      std::uint64_t key = 0;
      const bool useMemo = n.memo >= 0 && bits * static_cast<int>(n.freeSlots.size()) <= 64;
      if (useMemo) {
        for (int s : n.freeSlots) key = (key << bits) | static_cast<std::uint64_t>(values[s]);
        auto it = memo[n.memo].find(key);
        if (it != memo[n.memo].end()) return it->second;
      }
      const bool universal = n.kind == NodeKind::Forall;
      const Vertex saved = values[n.a];
      bool result = universal;
      auto test = [&](Vertex v) {
        values[n.a] = v;
        if (eval(n.kids[0]) != universal) {
          result = !universal;
          return false;
        }
        return true;
      };
      switch (n.guard) {
        case Guard::Equal: test(values[n.guardSlot]); break;
        case Guard::Neighbors:
          for (Vertex v : g.neighbors(values[n.guardSlot]))
            if (!test(v)) break;
          break;
        case Guard::None:
          for (Vertex v = 0; v < g.vertexCount(); ++v)
            if (!test(v)) break;
          break;
      }
      values[n.a] = saved;
      if (useMemo) memo[n.memo].emplace(key, result);
      return result;
    }
  };
};

Evaluator::Evaluator(const Formula& f) : impl_(std::make_unique<Impl>()) {
  for (const auto& name : freeVariables(f)) impl_->freeSlots.push_back(impl_->slotOf(name));
  std::vector<int> scope = impl_->freeSlots;
  impl_->root = impl_->compile(f, scope);
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

template <GraphLike G>
bool Evaluator::operator()(const G& g, const Assignment& assignment) const {
  Impl::Run<G> run{*impl_, g, std::vector<Vertex>(impl_->slotNames.size(), 0), {}, 1};
  for (int s : impl_->freeSlots) {
    const std::string& name = impl_->slotNames[s];
    auto it = assignment.find(name);
    if (it == assignment.end()) throw ArgumentError("unbound variable '" + name + "'");
    if (it->second < 0 || it->second >= g.vertexCount())
      throw ArgumentError("variable '" + name + "' assigned to vertex " + std::to_string(it->second) +
                          " outside the graph");
    run.values[s] = it->second;
  }
  run.memo.resize(static_cast<std::size_t>(impl_->memoTables));
  run.bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(g.vertexCount()))));
  return run.eval(impl_->root);
}

template <GraphLike G>
bool evaluate(const G& g, const Formula& f, const Assignment& assignment) {
  return Evaluator(f)(g, assignment);
}

template bool Evaluator::operator()<Graph>(const Graph&, const Assignment&) const;
template bool Evaluator::operator()<SparseGraph>(const SparseGraph&, const Assignment&) const;
template bool evaluate<Graph>(const Graph&, const Formula&, const Assignment&);
template bool evaluate<SparseGraph>(const SparseGraph&, const Formula&, const Assignment&);

}  // namespace zol
