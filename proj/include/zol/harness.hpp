#pragma once

#include "zol/random_graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zol {

inline constexpr const char* kVersion = "0.1.0";

/// Flat key=value experiment description. Keys: k, formula (repeatable),
/// n (comma list), p, samples, seed, workers, csv, json.
struct ExperimentConfig {
  int k = 3;
  std::vector<std::string> formulas;
  std::vector<int> ns;
  std::optional<std::string> p;  // default N^-1/(k-2)
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string csvPath;
  std::string jsonPath;

  static ExperimentConfig fromText(const std::string& text);
  static ExperimentConfig fromFile(const std::string& path);
  void set(const std::string& key, const std::string& value);
  void validate() const;
  ProbabilitySpec probability() const;
  /// Serialization of everything that determines the results (not workers or paths).
  std::string canonical() const;
  /// FNV-1a 64 of canonical().
  std::uint64_t hash() const;
};

struct SweepSeries {
  std::string formula;
  int depth = 0;
  std::vector<Estimate> estimates;
  double stabilization = 0;
};

struct SweepReport {
  ExperimentConfig config;
  std::vector<SweepSeries> series;
};

/// Largest gap between the 95% intervals of any two of the last three
/// estimates (0 when they pairwise overlap).
double stabilizationStatistic(std::span<const Estimate> estimates);

/// Refuses formulas deeper than cfg.k.
SweepReport runConvergenceSweep(const ExperimentConfig& cfg);

std::string provenanceLine(const ExperimentConfig& cfg);
/// `N,phat,ci_lo,ci_hi,samples,seed` rows under a provenance header; one
/// "# formula:" comment line per series.
std::string sweepCsv(const SweepReport& report);
std::string sweepJson(const SweepReport& report);

std::string formatDouble(double x);

}  // namespace zol
