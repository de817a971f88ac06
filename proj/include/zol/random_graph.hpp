#pragma once

#include "zol/formula.hpp"
#include "zol/graph.hpp"
#include "zol/rational.hpp"
#include "zol/rooted_pair.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace zol {

/// Edge probability: a fixed rational, or N^(-a/b) evaluated per N.
class ProbabilitySpec {
 public:
  static ProbabilitySpec constant(const Rational& p);
  /// p = N^(-exponent), exponent >= 0.
  static ProbabilitySpec power(const Rational& exponent);
  /// Accepts "p/q", decimals, "N^-a/b", "N^(-a/b)", "N^-a".
  static ProbabilitySpec parse(const std::string& text);

  bool symbolic() const { return symbolic_; }
  const Rational& value() const { return value_; }
  const Rational& exponent() const { return exponent_; }

  double at(int n) const;
  /// Exact value at n when it is rational (constant p, or an integer exponent).
  std::optional<Rational> exactAt(int n) const;
  std::string str() const;

 private:
  bool symbolic_ = false;
  Rational value_;
  Rational exponent_;
};

/// P_{N,p}(G) = p^e (1-p)^(C(N,2)-e), evaluated in log space.
template <GraphLike G>
double graphProbability(const G& g, int n, const ProbabilitySpec& p);
/// Exact value for rational p.
Rational graphProbabilityExact(const Graph& g, const Rational& p);

struct ExactResult {
  double value = 0;
  std::optional<Rational> exact;  // present when p is rational at this N
  bool costWarning = false;       // N above the default ceiling
};

inline constexpr int kExactDefaultCeiling = 6;
inline constexpr int kExactHardCeiling = 7;

/// Sum of P_{N,p}(G) over all labeled graphs on N vertices satisfying the
/// sentence. N <= 6 runs silently, N = 7 sets costWarning, larger N is refused.
ExactResult exactPropertyProbability(int n, const ProbabilitySpec& p, const Formula& sentence);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);
/// Seed of sample `index` under `masterSeed`.
std::uint64_t sampleSeed(std::uint64_t masterSeed, std::uint64_t index);

/// G(N,p) by geometric skipping over the C(N,2) pairs (expected O(N + edges)).
SparseGraph sampleGraph(int n, double p, std::uint64_t sampleIndex, std::uint64_t masterSeed);

struct Estimate {
  int n = 0;
  std::string p;
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  double pHat = 0;
  double ciLow = 0;
  double ciHigh = 0;
};

inline constexpr double kWilsonZ95 = 1.959963984540054;

/// Wilson score interval at 95%.
std::pair<double, double> wilsonInterval(std::uint64_t successes, std::uint64_t samples);

/// workers = 0 uses the hardware concurrency. Results do not depend on workers.
Estimate estimateProbability(int n, const ProbabilitySpec& p, const Formula& sentence, std::uint64_t samples,
                             std::uint64_t masterSeed, int workers = 0);

struct ExtensionStats {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t tuplesPerSample = 0;
  bool subsampled = false;
  double meanCount = 0;          // average over samples of the per-sample mean over tuples
  std::uint64_t minCount = 0;    // over all samples and tuples
  std::uint64_t maxCount = 0;
  double meanRelativeSpread = 0; // average over samples of max|count-mean|/mean
  std::optional<Rational> predictedExponent;  // f(G,H) at alpha = a/b for p = N^(-a/b)
};

inline constexpr std::uint64_t kTupleScanLimit = 1000000;
inline constexpr std::uint64_t kTupleSubsample = 100000;

/// Per-sample sweep of I_W counts over root tuples: all ordered tuples of
/// distinct vertices when there are at most kTupleScanLimit of them,
/// otherwise kTupleSubsample uniform tuples.
ExtensionStats estimateExtensionStats(int n, const ProbabilitySpec& p, const RootedPair& pattern,
                                      std::uint64_t samples, std::uint64_t masterSeed, int workers = 0);

int resolveWorkers(int workers);

}  // namespace zol
