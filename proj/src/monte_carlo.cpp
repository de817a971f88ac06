#include "zol/random_graph.hpp"

#include "zol/errors.hpp"
#include "zol/extensions.hpp"
#include "zol/pair_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace zol {

int resolveWorkers(int workers) {
  if (workers < 0) throw ArgumentError("worker count must be nonnegative");
  if (workers == 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  return workers;
}

namespace {

// Runs job(i) for i in [0, count) on `workers` threads, index i on thread i % workers.
template <class Job>
void parallelFor(std::uint64_t count, int workers, Job&& job) {
  const auto w = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), count));
  if (w <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  for (std::uint64_t t = 0; t < w; ++t)
    threads.emplace_back([&, t] {
      try {
        for (std::uint64_t i = t; i < count; i += w) job(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::pair<double, double> wilsonInterval(std::uint64_t successes, std::uint64_t samples) {
  if (samples == 0) throw ArgumentError("Wilson interval needs at least one sample");
  const double n = static_cast<double>(samples);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = kWilsonZ95 * kWilsonZ95;
  const double denom = 1 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = kWilsonZ95 * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  double lo = std::max(0.0, center - half);
  double hi = std::min(1.0, center + half);
  if (successes == 0) lo = 0;
  if (successes == samples) hi = 1;
  return {std::min(lo, phat), std::max(hi, phat)};
}

Estimate estimateProbability(int n, const ProbabilitySpec& p, const Formula& sentence, std::uint64_t samples,
                             std::uint64_t masterSeed, int workers) {
  if (samples < 1) throw ArgumentError("samples must be at least 1");
  if (n < 0) throw ArgumentError("N must be nonnegative");
  if (!isSentence(sentence)) throw ArgumentError("formula '" + toString(sentence) + "' is not a sentence");
  const double pn = p.at(n);
  const Evaluator eval(sentence);
  std::vector<char> hit(samples, 0);
  parallelFor(samples, resolveWorkers(workers), [&](std::uint64_t i) {
    hit[i] = eval(sampleGraph(n, pn, i, masterSeed)) ? 1 : 0;
  });
  Estimate e;
  e.n = n;
  e.p = p.str();
  e.samples = samples;
  e.seed = masterSeed;
  e.successes = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  e.pHat = static_cast<double>(e.successes) / static_cast<double>(samples);
  std::tie(e.ciLow, e.ciHigh) = wilsonInterval(e.successes, samples);
  return e;
}

namespace {

struct SampleStats {
  double mean = 0;
  double spread = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
};

std::uint64_t orderedTupleCount(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    if (n - i <= 0) return 0;
    c *= static_cast<std::uint64_t>(n - i);
    if (c > kTupleScanLimit) return c;
  }
  return c;
}

}  // namespace

ExtensionStats estimateExtensionStats(int n, const ProbabilitySpec& p, const RootedPair& pattern,
                                      std::uint64_t samples, std::uint64_t masterSeed, int workers) {
  if (samples < 1) throw ArgumentError("samples must be at least 1");
  if (pattern.vertexCount() > 5) throw ArgumentError("extension statistics need a pattern with at most 5 vertices");
  if (pattern.degenerate()) throw ArgumentError("pattern must add at least one vertex");
  const int k = pattern.rootCount();
  const std::uint64_t tuples = orderedTupleCount(n, k);
  if (tuples == 0) throw ArgumentError("N too small for the pattern's roots");
  const bool subsample = tuples > kTupleScanLimit;

  ExtensionStats out;
  out.n = n;
  out.samples = samples;
  out.seed = masterSeed;
  out.subsampled = subsample;
  out.tuplesPerSample = subsample ? kTupleSubsample : tuples;
  if (p.symbolic() && p.exponent().sign() > 0) out.predictedExponent = fValue(pattern, p.exponent());

  const double pn = p.at(n);
  std::vector<SampleStats> perSample(samples);
  parallelFor(samples, resolveWorkers(workers), [&](std::uint64_t i) {
    const SparseGraph g = sampleGraph(n, pn, i, masterSeed);
    std::vector<std::uint64_t> counts;
    counts.reserve(out.tuplesPerSample);
    ExtensionQuery q{pattern, std::vector<Vertex>(static_cast<std::size_t>(k)), false};
    if (subsample) {
      std::mt19937_64 rng(mix64(sampleSeed(masterSeed, i) ^ 0x5DEECE66DULL));
      std::uniform_int_distribution<Vertex> pick(0, n - 1);
      for (std::uint64_t t = 0; t < kTupleSubsample; ++t) {
        for (int j = 0; j < k; ++j) {
          Vertex v;
          do v = pick(rng);
          while (std::find(q.roots.begin(), q.roots.begin() + j, v) != q.roots.begin() + j);
          q.roots[j] = v;
        }
        counts.push_back(countExtensionSets(g, q));
      }
    } else {
      auto rec = [&](auto&& self, int j) -> void {
        if (j == k) {
          counts.push_back(countExtensionSets(g, q));
          return;
        }
        for (Vertex v = 0; v < n; ++v) {
          if (std::find(q.roots.begin(), q.roots.begin() + j, v) != q.roots.begin() + j) continue;
          q.roots[j] = v;
          self(self, j + 1);
        }
      };
      rec(rec, 0);
    }
    SampleStats s;
    double sum = 0;
    for (auto c : counts) sum += static_cast<double>(c);
    s.mean = sum / static_cast<double>(counts.size());
    s.min = *std::min_element(counts.begin(), counts.end());
    s.max = *std::max_element(counts.begin(), counts.end());
    if (s.mean > 0)
      for (auto c : counts) s.spread = std::max(s.spread, std::abs(static_cast<double>(c) - s.mean) / s.mean);
    perSample[i] = s;
  });

  double meanSum = 0, spreadSum = 0;
  out.minCount = perSample.front().min;
  for (const auto& s : perSample) {
    meanSum += s.mean;
    spreadSum += s.spread;
    out.minCount = std::min(out.minCount, s.min);
    out.maxCount = std::max(out.maxCount, s.max);
  }
  out.meanCount = meanSum / static_cast<double>(samples);
  out.meanRelativeSpread = spreadSum / static_cast<double>(samples);
  return out;
}

}  // namespace zol
