#include "doctest.h"

#include "zol/cli.hpp"
#include "zol/harness.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zol;

namespace {

const std::string kDir = ZOL_GOLDEN_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

// "@" at the start of an argument stands for the fixture directory.
Run run(std::vector<std::string> args) {
  for (auto& a : args)
    if (!a.empty() && a[0] == '@') a = kDir + "/" + a.substr(1);
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Golden {
  const char* name;
  std::vector<std::string> args;
};

const std::vector<Golden> kGolden = {
    {"classify_k4_over_edge", {"pair", "classify", "--alpha", "1/2", "--pair", "@k4_over_edge.pair"}},
    {"classify_g2", {"pair", "classify", "--alpha", "1/2", "--pair", "@g2_k4.pair"}},
    {"enumerate_neutral", {"pair", "enumerate", "--roots", "2", "--added", "1", "--alpha", "1/2", "--class", "neutral"}},
    {"chain_k3", {"pair", "chain", "--graph", "@k3.edg", "--base", "0,1", "--alpha", "1/2"}},
    {"construct_g2", {"construct", "g2", "--k", "4"}},
    {"construct_g4", {"construct", "g4", "--k", "4"}},
    {"construct_g3u", {"construct", "g3u", "--k", "4", "--seq", "1", "--subsets", "0,3;1,2"}},
    {"count_star", {"extensions", "count", "--pair", "@edge_over_vertex.pair", "--host", "@star.edg", "--roots", "0"}},
    {"ehr_k3_p3", {"game", "ehr", "--g", "@k3.edg", "--h", "@p3.edg", "--rounds", "2"}},
    {"exact_triangle",
     {"exact", "--n", "3", "--p", "1/2", "--formula", "E x. E y. E z. (x~y & y~z & x~z)"}},
    {"info_k4", {"graph", "info", "--graph", "@k4.edg"}},
    {"eval_p3", {"logic", "eval", "--graph", "@p3.edg", "--formula", "A x. E y. x~y"}},
    {"estimate_csv",
     {"estimate", "--n", "5", "--p", "1", "--formula", "E x. E y. x~y", "--samples", "20", "--seed", "3", "--csv"}},
};

}  // namespace

TEST_CASE("golden outputs") {
  for (const auto& g : kGolden) {
    CAPTURE(g.name);
    const Run r = run(g.args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kDir + "/" + g.name + ".out"));
  }
}

TEST_CASE("documented examples") {
  CHECK(run({"pair", "classify", "--alpha", "1/2", "--pair", "@k4_over_edge.pair"}).out ==
        "{\"class\":[\"rigid\"],\"f\":\"-1/2\"}\n");
  const Run exact = run({"exact", "--n", "3", "--p", "1/2", "--formula", "E x. E y. E z. (x~y & y~z & x~z)"});
  CHECK(exact.out.find("\"value\":0.125") != std::string::npos);
  CHECK(run({"game", "ehr", "--g", "@k3.edg", "--h", "@p3.edg", "--rounds", "2"}).out.find("\"winner\":\"spoiler\"") !=
        std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"graph", "info", "--graph", "@k4.edg", "--bogus"}).code == 2);
  const Run missing = run({"game", "ehr", "--g", "@k3.edg", "--h", "@p3.edg"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("Usage") != std::string::npos);
  CHECK(run({"graph", "info", "--graph", "@does_not_exist.edg"}).code == 2);
  CHECK(run({"logic", "eval", "--graph", "@k3.edg", "--formula", "E x. (x~y"}).code == 2);
  CHECK(run({"pair", "classify", "--alpha", "0", "--pair", "@k4_over_edge.pair"}).code == 2);
  CHECK(run({"exact", "--n", "8", "--p", "1/2", "--formula", "A x. x=x"}).code == 3);
  const Run warn = run({"exact", "--n", "7", "--p", "1/2", "--formula", "A x. x=x"});
  CHECK(warn.code == 0);
  CHECK(warn.err.find("warning") != std::string::npos);
  CHECK(run({"pair", "enumerate", "--roots", "9", "--added", "1", "--alpha", "1/2", "--class", "rigid"}).code == 3);
  CHECK(run({"construct", "x1", "--k", "4", "--host", "@k4.edg", "--roots", "0", "--guard-max-v", "5"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep writes files and refuses deep formulas") {
  const auto dir = std::filesystem::temp_directory_path() / "zol_cli_test";
  std::filesystem::create_directories(dir);
  const std::string csv = (dir / "s.csv").string();
  const std::string json = (dir / "s.json").string();
  const Run r = run({"sweep", "--k", "3", "--formula", "A x. x=x", "--n", "3,4", "--p", "1/2", "--samples", "10",
                     "--seed", "5", "--csv", csv, "--json", json});
  CHECK(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind(std::string("# zol ") + kVersion + " seed=5 config=", 0) == 0);
  CHECK(text.find("N,phat,ci_lo,ci_hi,samples,seed\n3,1.000000,") != std::string::npos);
  CHECK(slurp(json).find("\"formula\"") != std::string::npos);
  CHECK(run({"sweep", "--k", "3", "--formula", "E x. E y. E z. E w. (x~y & z~w)", "--n", "3", "--samples", "5"}).code == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("experiment config") {
  const ExperimentConfig cfg = ExperimentConfig::fromText(
      "# comment\nk = 3\nformula = E x. E y. E z. (x~y & y~z & x~z)\nformula = A x. x=x\nn = 10,20\n"
      "samples = 40\nseed = 9\nworkers = 2\n");
  CHECK(cfg.k == 3);
  CHECK(cfg.formulas.size() == 2);
  CHECK(cfg.ns == std::vector<int>{10, 20});
  CHECK(cfg.probability().str() == ProbabilitySpec::power(Rational(1)).str());
  ExperimentConfig other = cfg;
  other.workers = 7;
  other.csvPath = "elsewhere.csv";
  CHECK(other.hash() == cfg.hash());
  other.seed = 10;
  CHECK(other.hash() != cfg.hash());
  CHECK_THROWS_AS(ExperimentConfig::fromText("k = three\n"), ArgumentError);
  CHECK_THROWS_AS(ExperimentConfig::fromText("colour = blue\n"), ArgumentError);
  CHECK_THROWS_AS(ExperimentConfig::fromText("k = 3\nn = 20,10\nformula = A x. x=x\n").validate(), ArgumentError);

  const SweepReport r = runConvergenceSweep(cfg);
  REQUIRE(r.series.size() == 2);
  for (const auto& e : r.series[1].estimates) CHECK(e.pHat == 1.0);
  CHECK(r.series[1].stabilization == 0.0);
}

TEST_CASE("stabilization statistic") {
  auto est = [](double lo, double hi) {
    Estimate e;
    e.ciLow = lo;
    e.ciHigh = hi;
    return e;
  };
  const std::vector<Estimate> overlap{est(0.1, 0.3), est(0.2, 0.4), est(0.25, 0.35)};
  CHECK(stabilizationStatistic(overlap) == 0.0);
  const std::vector<Estimate> gap{est(0.0, 0.9), est(0.1, 0.2), est(0.3, 0.4), est(0.5, 0.6)};
  CHECK(stabilizationStatistic(gap) == doctest::Approx(0.3));
}
