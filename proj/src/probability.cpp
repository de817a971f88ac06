#include "zol/random_graph.hpp"

#include "zol/errors.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace zol {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

ProbabilitySpec ProbabilitySpec::constant(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) throw ArgumentError("probability " + p.str() + " outside [0,1]");
  ProbabilitySpec s;
  s.value_ = p;
  return s;
}

ProbabilitySpec ProbabilitySpec::power(const Rational& exponent) {
  if (exponent.sign() < 0) throw ArgumentError("N^(" + exponent.str() + ") exceeds 1 for N > 1");
  ProbabilitySpec s;
  s.symbolic_ = true;
  s.exponent_ = exponent;
  return s;
}

ProbabilitySpec ProbabilitySpec::parse(const std::string& text) {
  std::string t = trim(text);
  if (t.size() >= 2 && (t[0] == 'N' || t[0] == 'n') && t[1] == '^') {
    std::string e = trim(t.substr(2));
    if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = trim(e.substr(1, e.size() - 2));
    bool negative = false;
    if (!e.empty() && e[0] == '-') {
      negative = true;
      e = trim(e.substr(1));
    }
    Rational r;
    try {
      r = Rational::parse(e);
    } catch (const std::exception&) {
      throw ArgumentError("malformed exponent in probability '" + text + "'");
    }
    if (!negative && !r.isZero()) throw ArgumentError("probability '" + text + "' exceeds 1");
    return power(r);
  }
  Rational p;
  try {
    p = Rational::parse(t);
  } catch (const std::exception&) {
    throw ArgumentError("malformed probability '" + text + "' (expected p/q, a decimal, or N^-a/b)");
  }
  return constant(p);
}

double ProbabilitySpec::at(int n) const {
  if (!symbolic_) return value_.toDouble();
  if (n < 1) throw ArgumentError("N^(-a/b) needs N >= 1");
  return std::pow(static_cast<double>(n), -exponent_.toDouble());
}

std::optional<Rational> ProbabilitySpec::exactAt(int n) const {
  if (!symbolic_) return value_;
  if (n < 1) throw ArgumentError("N^(-a/b) needs N >= 1");
  if (exponent_.denominator() != 1) return std::nullopt;
  const int e = exponent_.numerator().convert_to<int>();
  return Rational(1) / Rational(n).pow(e);
}

std::string ProbabilitySpec::str() const { return symbolic_ ? "N^-" + exponent_.str() : value_.str(); }

template <GraphLike G>
double graphProbability(const G& g, int n, const ProbabilitySpec& spec) {
  if (g.vertexCount() != n)
    throw ArgumentError("graph has " + std::to_string(g.vertexCount()) + " vertices, expected " + std::to_string(n));
  const double p = spec.at(n);
  const double pairs = 0.5 * n * (n - 1.0);
  const double e = static_cast<double>(g.edgeCount());
  if (p == 0) return e == 0 ? 1.0 : 0.0;
  if (p == 1) return e == pairs ? 1.0 : 0.0;
  return std::exp(e * std::log(p) + (pairs - e) * std::log1p(-p));
}

template double graphProbability<Graph>(const Graph&, int, const ProbabilitySpec&);
template double graphProbability<SparseGraph>(const SparseGraph&, int, const ProbabilitySpec&);

Rational graphProbabilityExact(const Graph& g, const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) throw ArgumentError("probability " + p.str() + " outside [0,1]");
  const int n = g.vertexCount();
  const int pairs = n * (n - 1) / 2;
  const int e = static_cast<int>(g.edgeCount());
  return p.pow(e) * (Rational(1) - p).pow(pairs - e);
}

ExactResult exactPropertyProbability(int n, const ProbabilitySpec& p, const Formula& sentence) {
  if (n < 0) throw ArgumentError("N must be nonnegative");
  if (n > kExactHardCeiling)
    throw RefusalError("exact enumeration refused for N = " + std::to_string(n) + " (ceiling " +
                       std::to_string(kExactHardCeiling) + ", 2^" + std::to_string(n * (n - 1) / 2) + " graphs)");
  if (!isSentence(sentence)) throw ArgumentError("formula '" + toString(sentence) + "' is not a sentence");

  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const int pairs = static_cast<int>(slots.size());
  std::vector<std::uint64_t> byEdges(static_cast<std::size_t>(pairs + 1), 0);
  const Evaluator eval(sentence);
  std::vector<Edge> es;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    es.clear();
    for (std::uint64_t m = mask; m; m &= m - 1) es.push_back(slots[std::countr_zero(m)]);
    if (eval(Graph(n, es))) ++byEdges[es.size()];
  }

  ExactResult result;
  result.costWarning = n > kExactDefaultCeiling;
  if (auto exact = p.exactAt(n)) {
    Rational sum(0);
    const Rational q = Rational(1) - *exact;
    for (int e = 0; e <= pairs; ++e)
      if (byEdges[e]) sum += Rational(static_cast<std::int64_t>(byEdges[e])) * exact->pow(e) * q.pow(pairs - e);
    result.exact = sum;
    result.value = sum.toDouble();
  } else {
    const double pv = p.at(n);
    double sum = 0;
    for (int e = 0; e <= pairs; ++e)
      if (byEdges[e]) sum += static_cast<double>(byEdges[e]) * std::pow(pv, e) * std::pow(1 - pv, pairs - e);
    result.value = sum;
  }
  return result;
}

}  // namespace zol
