#include "zol/harness.hpp"

#include "zol/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zol {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

template <class T>
T parseNumber(const std::string& key, const std::string& text) {
  T value{};
  const std::string t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ArgumentError("config key '" + key + "': malformed number '" + text + "'");
  return value;
}

}  // namespace

std::string formatDouble(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void ExperimentConfig::set(const std::string& rawKey, const std::string& value) {
  const std::string key = trim(rawKey);
  if (key == "k") {
    k = parseNumber<int>(key, value);
  } else if (key == "formula") {
    formulas.push_back(trim(value));
  } else if (key == "n") {
    ns.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) ns.push_back(parseNumber<int>(key, item));
  } else if (key == "p") {
    p = trim(value);
  } else if (key == "samples") {
    samples = parseNumber<std::uint64_t>(key, value);
  } else if (key == "seed") {
    seed = parseNumber<std::uint64_t>(key, value);
  } else if (key == "workers") {
    workers = parseNumber<int>(key, value);
  } else if (key == "csv") {
    csvPath = trim(value);
  } else if (key == "json") {
    jsonPath = trim(value);
  } else {
    throw ArgumentError("unknown config key '" + key + "'");
  }
}

ExperimentConfig ExperimentConfig::fromText(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ArgumentError("config line " + std::to_string(lineNo) + ": expected key=value");
    cfg.set(t.substr(0, eq), t.substr(eq + 1));
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return fromText(ss.str());
}

void ExperimentConfig::validate() const {
  if (k < 3) throw ArgumentError("k must be at least 3");
  if (formulas.empty()) throw ArgumentError("sweep needs at least one formula");
  if (ns.empty()) throw ArgumentError("sweep needs at least one N");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw ArgumentError("N values must be positive");
    if (i > 0 && ns[i] <= ns[i - 1]) throw ArgumentError("N sweep must be strictly increasing");
  }
  if (samples < 1) throw ArgumentError("samples must be at least 1");
  if (workers < 0) throw ArgumentError("workers must be nonnegative");
  probability();
}

ProbabilitySpec ExperimentConfig::probability() const {
  if (p) return ProbabilitySpec::parse(*p);
  return ProbabilitySpec::power(Rational(1, k - 2));
}

std::string ExperimentConfig::canonical() const {
  std::string s = "k=" + std::to_string(k) + "\n";
  for (const auto& f : formulas) s += "formula=" + f + "\n";
  s += "n=";
  for (std::size_t i = 0; i < ns.size(); ++i) s += (i ? "," : "") + std::to_string(ns[i]);
  s += "\np=" + probability().str() + "\nsamples=" + std::to_string(samples) + "\nseed=" + std::to_string(seed) + "\n";
  return s;
}

std::uint64_t ExperimentConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double stabilizationStatistic(std::span<const Estimate> estimates) {
  const std::size_t from = estimates.size() > 3 ? estimates.size() - 3 : 0;
  double gap = 0;
  for (std::size_t i = from; i < estimates.size(); ++i)
    for (std::size_t j = i + 1; j < estimates.size(); ++j) {
      const auto& a = estimates[i];
      const auto& b = estimates[j];
      gap = std::max({gap, b.ciLow - a.ciHigh, a.ciLow - b.ciHigh});
    }
  return gap;
}

SweepReport runConvergenceSweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const ProbabilitySpec p = cfg.probability();
  std::vector<Formula> parsed;
  for (const auto& text : cfg.formulas) {
    Formula f = parse(text);
    if (!inClassLk(f, cfg.k))
      throw RefusalError("formula '" + text + "' has quantifier depth " + std::to_string(quantifierDepth(f)) +
                         " > k = " + std::to_string(cfg.k));
    parsed.push_back(std::move(f));
  }
  SweepReport report;
  report.config = cfg;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    SweepSeries s;
    s.formula = cfg.formulas[i];
    s.depth = quantifierDepth(parsed[i]);
    for (int n : cfg.ns) s.estimates.push_back(estimateProbability(n, p, parsed[i], cfg.samples, cfg.seed, cfg.workers));
    s.stabilization = stabilizationStatistic(s.estimates);
    report.series.push_back(std::move(s));
  }
  return report;
}

std::string provenanceLine(const ExperimentConfig& cfg) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cfg.hash()));
  return std::string("# zol ") + kVersion + " seed=" + std::to_string(cfg.seed) + " config=" + hash;
}

std::string sweepCsv(const SweepReport& report) {
  std::string out = provenanceLine(report.config) + "\n";
  for (const auto& s : report.series) {
    out += "# formula: " + s.formula + "\n";
    out += "N,phat,ci_lo,ci_hi,samples,seed\n";
    for (const auto& e : s.estimates)
      out += std::to_string(e.n) + "," + formatDouble(e.pHat) + "," + formatDouble(e.ciLow) + "," +
             formatDouble(e.ciHigh) + "," + std::to_string(e.samples) + "," + std::to_string(e.seed) + "\n";
  }
  return out;
}

std::string sweepJson(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["seed"] = report.config.seed;
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(report.config.hash()));
  j["config_hash"] = hash;
  j["k"] = report.config.k;
  j["p"] = report.config.probability().str();
  j["series"] = nlohmann::ordered_json::array();
  for (const auto& s : report.series) {
    nlohmann::ordered_json js;
    js["formula"] = s.formula;
    js["depth"] = s.depth;
    js["stabilization"] = s.stabilization;
    js["estimates"] = nlohmann::ordered_json::array();
    for (const auto& e : s.estimates)
      js["estimates"].push_back({{"N", e.n},
                                 {"phat", e.pHat},
                                 {"ci_lo", e.ciLow},
                                 {"ci_hi", e.ciHigh},
                                 {"samples", e.samples},
                                 {"successes", e.successes},
                                 {"seed", e.seed}});
    j["series"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

}  // namespace zol
