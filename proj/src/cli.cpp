#include "zol/cli.hpp"

#include "zol/canonical.hpp"
#include "zol/constructions.hpp"
#include "zol/density.hpp"
#include "zol/ef_game.hpp"
#include "zol/errors.hpp"
#include "zol/extensions.hpp"
#include "zol/formula.hpp"
#include "zol/graph_io.hpp"
#include "zol/harness.hpp"
#include "zol/pair_calculus.hpp"
#include "zol/random_graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace zol {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int toInt(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError("malformed " + what + " '" + s + "'");
  }
}

std::vector<int> intList(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(toInt(item, what));
  return out;
}

Rational rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw ArgumentError("malformed " + what + " '" + text + "'");
  }
}

Rational positiveAlpha(const std::string& text) {
  Rational a = rational(text, "alpha");
  if (a.sign() <= 0) throw ArgumentError("alpha must be positive");
  return a;
}

// "0-1,1-2" -> edges
std::vector<Edge> edgeList(const std::string& text) {
  std::vector<Edge> out;
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ArgumentError("malformed edge '" + item + "' (expected u-v)");
    out.emplace_back(toInt(item.substr(0, dash), "vertex"), toInt(item.substr(dash + 1), "vertex"));
  }
  return out;
}

Json edgesJson(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back({e.u, e.v});
  return a;
}

Json maskJson(std::uint64_t mask) {
  Json a = Json::array();
  for (; mask; mask &= mask - 1) a.push_back(std::countr_zero(mask));
  return a;
}

Json pairJson(const RootedPair& p) {
  return {{"k", p.rootCount()}, {"l", p.vertexCount()}, {"h", edgesJson(p.rootEdges())},
          {"g", edgesJson(p.newEdges())}};
}

Json estimateJson(const Estimate& e) {
  return {{"N", e.n},       {"p", e.p},         {"phat", e.pHat},         {"ci_lo", e.ciLow}, {"ci_hi", e.ciHigh},
          {"samples", e.samples}, {"successes", e.successes}, {"seed", e.seed}};
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ArgumentError("cannot write '" + path + "'");
  f << content;
}

Formula parseSentence(const std::string& text) {
  Formula f = parse(text);
  if (!isSentence(f)) throw ArgumentError("formula must be a sentence (no free variables)");
  return f;
}

struct Cli {
  std::ostream& out;
  std::ostream& err;
  CLI::App app{"Laboratory for first-order properties of G(N,p) at critical densities", "zol"};
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;

  void on(CLI::App* sub, std::function<void()> action) { actions.emplace_back(sub, std::move(action)); }

  void emit(const Json& j) { out << j.dump() << "\n"; }

  Cli(std::ostream& o, std::ostream& e) : out(o), err(e) {
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    graphCommands();
    pairCommands();
    extensionCommands();
    constructCommand();
    closureCommand();
    logicCommands();
    gameCommand();
    estimateCommands();
    sweepCommand();
    scanCommand();
  }

  void graphCommands() {
    auto* graph = app.add_subcommand("graph", "Density and isomorphism of EDG graphs");
    graph->require_subcommand(1);
    auto* info = graph->add_subcommand("info", "Density, maximal density and balance");
    auto* file = str();
    info->add_option("--graph", *file, "EDG v1 file")->required();
    on(info, [this, file] {
      const Graph g = io::loadEdg(*file);
      Json j{{"n", g.vertexCount()}, {"edges", g.edgeCount()}};
      if (g.vertexCount() > 0) {
        j["density"] = density(g).str();
        j["max_density"] = maximalDensity(g).str();
        j["balanced"] = isBalanced(g);
        j["strictly_balanced"] = isStrictlyBalanced(g);
      }
      emit(j);
    });
    auto* iso = graph->add_subcommand("iso", "Graph isomorphism test");
    auto* a = str();
    auto* b = str();
    iso->add_option("--a", *a, "first EDG file")->required();
    iso->add_option("--b", *b, "second EDG file")->required();
    on(iso, [this, a, b] { emit({{"isomorphic", isomorphic(io::loadEdg(*a), io::loadEdg(*b))}}); });
  }

  void pairCommands() {
    auto* pair = app.add_subcommand("pair", "Safe / rigid / neutral calculus");
    pair->require_subcommand(1);

    auto* classify = pair->add_subcommand("classify", "Classify a PAIR v1 file");
    auto* file = str();
    auto* alpha = str();
    auto* reading = str("induced");
    classify->add_option("--pair", *file, "PAIR v1 file")->required();
    classify->add_option("--alpha", *alpha, "alpha as p/q")->required();
    classify->add_option("--reading", *reading, "intermediate subgraphs: induced or all")
        ->check(CLI::IsMember({"induced", "all"}));
    on(classify, [this, file, alpha, reading] {
      const auto r = *reading == "all" ? SubgraphReading::AllSubgraphs : SubgraphReading::VertexInduced;
      const PairClass c = classifyPair(io::loadPair(*file), positiveAlpha(*alpha), r);
      emit({{"class", c.names()}, {"f", c.f.str()}});
    });

    auto* enumerate = pair->add_subcommand("enumerate", "List pairs of one class within bounds");
    auto* roots = integer(0);
    auto* added = integer(0);
    auto* alpha2 = str();
    auto* kind = str();
    enumerate->add_option("--roots", *roots, "maximum number of roots")->required();
    enumerate->add_option("--added", *added, "maximum number of added vertices")->required();
    enumerate->add_option("--alpha", *alpha2, "alpha as p/q")->required();
    enumerate->add_option("--class", *kind, "safe, rigid or neutral")->required();
    on(enumerate, [this, roots, added, alpha2, kind] {
      const Rational a = positiveAlpha(*alpha2);
      const auto pairs = enumeratePairs(*roots, *added, a, parsePairKind(*kind));
      Json list = Json::array();
      for (const auto& p : pairs) list.push_back(pairJson(p));
      emit({{"class", *kind}, {"alpha", a.str()}, {"count", pairs.size()}, {"pairs", list}});
    });

    auto* chain = pair->add_subcommand("chain", "Search an alpha-neutral chain from a base vertex set");
    auto* graphFile = str();
    auto* base = str();
    auto* alpha3 = str();
    chain->add_option("--graph", *graphFile, "EDG v1 file of G")->required();
    chain->add_option("--base", *base, "comma-separated vertices of H")->required();
    chain->add_option("--alpha", *alpha3, "alpha as p/q")->required();
    on(chain, [this, graphFile, base, alpha3] {
      const Graph g = io::loadEdg(*graphFile);
      std::uint64_t mask = 0;
      for (int v : intList(*base, "vertex")) {
        if (v < 0 || v >= g.vertexCount()) throw ArgumentError("base vertex " + std::to_string(v) + " out of range");
        mask |= bit(v);
      }
      const auto found = findNeutralChain(g, mask, positiveAlpha(*alpha3));
      Json j{{"chain", found.has_value()}};
      if (found) {
        Json blocks = Json::array(), anchors = Json::array();
        for (auto b : found->blocks) blocks.push_back(maskJson(b));
        for (auto a : found->anchors) anchors.push_back(maskJson(a));
        j["blocks"] = blocks;
        j["anchors"] = anchors;
      }
      emit(j);
    });
  }

  void extensionCommands() {
    auto* ext = app.add_subcommand("extensions", "Extension counts and maximality");
    ext->require_subcommand(1);

    auto* count = ext->add_subcommand("count", "Count (G,H)-extension sets over given roots");
    auto* pairFile = str();
    auto* host = str();
    auto* roots = str();
    auto* strict = flag();
    count->add_option("--pair", *pairFile, "PAIR v1 pattern")->required();
    count->add_option("--host", *host, "EDG v1 host")->required();
    count->add_option("--roots", *roots, "comma-separated host vertices")->required();
    count->add_flag("--strict", *strict, "require non-edges to be respected");
    on(count, [this, pairFile, host, roots, strict] {
      const SparseGraph g = io::loadEdgSparse(*host);
      const ExtensionQuery q{io::loadPair(*pairFile), intList(*roots, "root"), *strict};
      emit({{"count", countExtensionSets(g, q)}, {"embeddings", countExtensionEmbeddings(g, q)}, {"strict", *strict}});
    });

    auto* maximal = ext->add_subcommand("maximal", "Count strict extensions maximal for a pattern class");
    auto* pairFile2 = str();
    auto* host2 = str();
    auto* roots2 = str();
    auto* alpha = str();
    auto* kind = str("rigid");
    auto* r = integer(2);
    auto* t = integer(3);
    maximal->add_option("--pair", *pairFile2, "PAIR v1 pattern")->required();
    maximal->add_option("--host", *host2, "EDG v1 host")->required();
    maximal->add_option("--roots", *roots2, "comma-separated host vertices")->required();
    maximal->add_option("--alpha", *alpha, "alpha as p/q")->required();
    maximal->add_option("--class", *kind, "rigid or neutral")->check(CLI::IsMember({"rigid", "neutral"}));
    maximal->add_option("--r", *r, "bound on added vertices of the (K,T) pairs");
    maximal->add_option("--t", *t, "bound on root vertices of the (K,T) pairs");
    maximal->add_flag("--strict", "accepted for symmetry; maximal counts are always strict");
    on(maximal, [this, pairFile2, host2, roots2, alpha, kind, r, t] {
      const SparseGraph g = io::loadEdgSparse(*host2);
      const ExtensionQuery q{io::loadPair(*pairFile2), intList(*roots2, "root"), true};
      const auto c = countMaximalExtensions(g, q, parsePairKind(*kind), *r, *t, positiveAlpha(*alpha));
      emit({{"count", c}, {"strict", true}, {"class", *kind}, {"bounds", {{"r", *r}, {"t", *t}}}});
    });

    auto* copies = ext->add_subcommand("copies", "Count (K,T)-maximal induced copies of a graph");
    auto* graphFile = str();
    auto* host3 = str();
    auto* alpha3 = str();
    auto* r3 = integer(2);
    auto* t3 = integer(3);
    copies->add_option("--graph", *graphFile, "EDG v1 pattern graph")->required();
    copies->add_option("--host", *host3, "EDG v1 host")->required();
    copies->add_option("--alpha", *alpha3, "alpha as p/q")->required();
    copies->add_option("--r", *r3, "bound on added vertices of the neutral pairs");
    copies->add_option("--t", *t3, "bound on root vertices of the neutral pairs");
    on(copies, [this, graphFile, host3, alpha3, r3, t3] {
      const auto c = countMaximalCopies(io::loadEdg(*graphFile), io::loadEdgSparse(*host3), positiveAlpha(*alpha3),
                                        *r3, *t3);
      emit({{"count", c}, {"bounds", {{"r", *r3}, {"t", *t3}}}});
    });
  }

  void constructCommand() {
    auto* c = app.add_subcommand("construct", "Build the graph family as PAIR v1, or X1 as JSON");
    auto* kind = str();
    auto* k = integer(0);
    auto* seq = str();
    auto* subsets = str();
    auto* rootEdges = str();
    auto* host = str();
    auto* roots = str();
    auto* guard = integer(kScanDefaultMaxV);
    c->add_option("kind", *kind, "g1 g2 g3 g3u g4 g4v1 g4v2 x1")
        ->required()
        ->check(CLI::IsMember({"g1", "g2", "g3", "g3u", "g4", "g4v1", "g4v2", "x1"}));
    c->add_option("--k", *k, "k >= 4")->required();
    c->add_option("--seq", *seq, "index sequence i1,i2,... for g3 / g3u");
    c->add_option("--subsets", *subsets, "U for g3u: members separated by ';', vertices by ','");
    c->add_option("--root-edges", *rootEdges, "edges of H1 / H2 as u-v,u-v");
    c->add_option("--host", *host, "EDG v1 host for x1");
    c->add_option("--roots", *roots, "k-3 host vertices for x1");
    c->add_option("--guard-max-v", *guard, "density guard bound for x1");
    on(c, [this, kind, k, seq, subsets, rootEdges, host, roots, guard] {
      const auto h = edgeList(*rootEdges);
      if (*kind == "x1") {
        if (host->empty()) throw ArgumentError("construct x1 needs --host");
        const Graph g = io::loadEdg(*host);
        const auto rs = intList(*roots, "root");
        const X1Result x = buildX1(g, rs, *k, *guard);
        Json xs = Json::array();
        for (Vertex v : x.xHatVertices) xs.push_back(v);
        Json cs = Json::array();
        for (Vertex v : x.x1.vertices) cs.push_back(v);
        emit({{"extensions", x.extensionCount},
              {"intersecting", x.intersectingCount},
              {"bound", x.bound},
              {"within_bound", x.intersectingCount <= x.bound},
              {"xhat_vertices", xs},
              {"xhat_edges", edgesJson(x.xHat.edges())},
              {"x1_vertices", cs},
              {"x1_edges", edgesJson(x.x1.graph.edges())}});
        return;
      }
      RootedPair p;
      if (*kind == "g1") p = buildG1H1(*k, h);
      else if (*kind == "g2") p = buildG2H2(*k, h);
      else if (*kind == "g3") p = buildG3(*k, intList(*seq, "index"), h);
      else if (*kind == "g3u") {
        std::vector<std::vector<Vertex>> family;
        for (const auto& member : split(*subsets, ';')) family.push_back(intList(member, "vertex"));
        p = buildG3U(*k, intList(*seq, "index"), family, h);
      } else if (*kind == "g4") p = buildG4(*k, h);
      else if (*kind == "g4v1") p = buildG4v1(*k, h);
      else p = buildG4v2(*k, h);
      out << io::toPairString(p);
    });
  }

  void closureCommand() {
    auto* c = app.add_subcommand("closure", "Closure [A] of the induced subgraph on --subset, as EDG v1");
    auto* k = integer(0);
    auto* host = str();
    auto* subset = str();
    c->add_option("--k", *k, "k >= 4")->required();
    c->add_option("--host", *host, "EDG v1 host")->required();
    c->add_option("--subset", *subset, "comma-separated host vertices of A")->required();
    on(c, [this, k, host, subset] {
      const Graph g = io::loadEdg(*host);
      const auto vs = intList(*subset, "vertex");
      detail::validateVertices(g, vs, "subset");
      const ClosureResult r = closure(inducedSubgraph(g, vs), g, vs, *k);
      out << io::toEdgString(r.graph) << "# host vertices:";
      for (Vertex v : r.vertices) out << ' ' << v;
      out << "\n";
    });
  }

  void logicCommands() {
    auto* logic = app.add_subcommand("logic", "First-order formulas");
    logic->require_subcommand(1);
    auto* eval = logic->add_subcommand("eval", "Evaluate a formula on a graph");
    auto* graph = str();
    auto* formula = str();
    auto* assign = str();
    eval->add_option("--graph", *graph, "EDG v1 file")->required();
    eval->add_option("--formula", *formula, "formula text")->required();
    eval->add_option("--assign", *assign, "free variables as x=0,y=3");
    on(eval, [this, graph, formula, assign] {
      const Formula f = parse(*formula);
      Assignment a;
      for (const auto& item : split(*assign, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ArgumentError("malformed assignment '" + item + "'");
        a[item.substr(0, eq)] = toInt(item.substr(eq + 1), "vertex");
      }
      emit({{"value", evaluate(io::loadEdgSparse(*graph), f, a)}, {"depth", quantifierDepth(f)}});
    });
    auto* depth = logic->add_subcommand("depth", "Quantifier depth of a formula");
    auto* formula2 = str();
    depth->add_option("--formula", *formula2, "formula text")->required();
    on(depth, [this, formula2] { emit({{"depth", quantifierDepth(parse(*formula2))}}); });
  }

  void gameCommand() {
    auto* game = app.add_subcommand("game", "Ehrenfeucht games");
    game->require_subcommand(1);
    auto* ehr = game->add_subcommand("ehr", "Solve EHR(G,H,i)");
    ehr->set_help_flag("--help", "Print this help message and exit");
    auto* g = str();
    auto* h = str();
    auto* rounds = integer(0);
    ehr->add_option("--g", *g, "EDG v1 file")->required();
    ehr->add_option("--h", *h, "EDG v1 file")->required();
    ehr->add_option("--rounds", *rounds, "number of rounds")->required();
    on(ehr, [this, g, h, rounds] {
      const GameResult r = solveGame(io::loadEdg(*g), io::loadEdg(*h), *rounds);
      Json j{{"winner", toString(r.winner)}, {"witness", nullptr}};
      if (r.witness) j["witness"] = {{"graph", std::string(1, r.witness->graph)}, {"vertex", r.witness->vertex}};
      emit(j);
    });
  }

  void estimateCommands() {
    auto* est = app.add_subcommand("estimate", "Monte Carlo estimate of P_{N,p}(sentence)");
    auto* n = integer(0);
    auto* p = str();
    auto* formula = str();
    auto* samples = u64(1000);
    auto* seed = u64(1);
    auto* workers = integer(0);
    auto* csv = flag();
    est->add_option("--n", *n, "number of vertices")->required();
    est->add_option("--p", *p, "p/q, decimal or N^-a/b")->required();
    est->add_option("--formula", *formula, "sentence")->required();
    est->add_option("--samples", *samples, "number of samples");
    est->add_option("--seed", *seed, "master seed");
    est->add_option("--workers", *workers, "threads (0 = all cores)");
    est->add_flag("--csv", *csv, "print a CSV row instead of JSON");
    on(est, [this, n, p, formula, samples, seed, workers, csv] {
      const Estimate e = estimateProbability(*n, ProbabilitySpec::parse(*p), parseSentence(*formula), *samples,
                                             *seed, *workers);
      if (*csv) {
        out << "N,phat,ci_lo,ci_hi,samples,seed\n"
            << e.n << "," << formatDouble(e.pHat) << "," << formatDouble(e.ciLow) << "," << formatDouble(e.ciHigh)
            << "," << e.samples << "," << e.seed << "\n";
      } else {
        emit(estimateJson(e));
      }
    });

    auto* exact = app.add_subcommand("exact", "Exact P_{N,p}(sentence) by enumerating all graphs");
    auto* n2 = integer(0);
    auto* p2 = str();
    auto* formula2 = str();
    exact->add_option("--n", *n2, "number of vertices (<= 7)")->required();
    exact->add_option("--p", *p2, "p/q, decimal or N^-a/b")->required();
    exact->add_option("--formula", *formula2, "sentence")->required();
    on(exact, [this, n2, p2, formula2] {
      const ExactResult r = exactPropertyProbability(*n2, ProbabilitySpec::parse(*p2), parseSentence(*formula2));
      if (r.costWarning) err << "warning: N = " << *n2 << " enumerates 2^" << (*n2 * (*n2 - 1) / 2) << " graphs\n";
      Json j{{"N", *n2}, {"p", ProbabilitySpec::parse(*p2).str()}, {"value", r.value}};
      j["exact"] = r.exact ? Json(r.exact->str()) : Json(nullptr);
      emit(j);
    });

    auto* stats = app.add_subcommand("ext-stats", "Extension-count statistics over sampled graphs");
    auto* pairFile = str();
    auto* n3 = integer(0);
    auto* p3 = str();
    auto* samples3 = u64(20);
    auto* seed3 = u64(1);
    auto* workers3 = integer(0);
    stats->add_option("--pair", *pairFile, "PAIR v1 pattern (at most 5 vertices)")->required();
    stats->add_option("--n", *n3, "number of vertices")->required();
    stats->add_option("--p", *p3, "p/q, decimal or N^-a/b")->required();
    stats->add_option("--samples", *samples3, "number of samples");
    stats->add_option("--seed", *seed3, "master seed");
    stats->add_option("--workers", *workers3, "threads (0 = all cores)");
    on(stats, [this, pairFile, n3, p3, samples3, seed3, workers3] {
      const ExtensionStats s = estimateExtensionStats(*n3, ProbabilitySpec::parse(*p3), io::loadPair(*pairFile),
                                                      *samples3, *seed3, *workers3);
      Json j{{"N", s.n},
             {"samples", s.samples},
             {"seed", s.seed},
             {"tuples_per_sample", s.tuplesPerSample},
             {"subsampled", s.subsampled},
             {"mean_count", s.meanCount},
             {"min_count", s.minCount},
             {"max_count", s.maxCount},
             {"mean_relative_spread", s.meanRelativeSpread}};
      j["predicted_exponent"] = s.predictedExponent ? Json(s.predictedExponent->str()) : Json(nullptr);
      emit(j);
    });
  }

  void sweepCommand() {
    auto* sweep = app.add_subcommand("sweep", "Convergence sweep over N (config file plus overriding flags)");
    auto* config = str();
    auto* k = integer(3);
    ownedList.emplace_back(std::make_unique<std::vector<std::string>>());
    auto* formulas = ownedList.back().get();
    auto* ns = str();
    auto* p = str();
    auto* samples = u64(1000);
    auto* seed = u64(1);
    auto* workers = integer(0);
    auto* csv = str();
    auto* json = str();
    sweep->add_option("--config", *config, "key=value config file");
    auto* kOpt = sweep->add_option("--k", *k, "depth class L_k");
    auto* fOpt = sweep->add_option("--formula", *formulas, "sentence (repeatable)");
    auto* nOpt = sweep->add_option("--n", *ns, "comma-separated increasing N values");
    auto* pOpt = sweep->add_option("--p", *p, "p rule; default N^-1/(k-2)");
    auto* sOpt = sweep->add_option("--samples", *samples, "samples per N");
    auto* seedOpt = sweep->add_option("--seed", *seed, "master seed");
    auto* wOpt = sweep->add_option("--workers", *workers, "threads (0 = all cores)");
    auto* csvOpt = sweep->add_option("--csv", *csv, "write CSV here");
    auto* jsonOpt = sweep->add_option("--json", *json, "write JSON here");
    on(sweep, [=, this] {
      ExperimentConfig cfg = config->empty() ? ExperimentConfig{} : ExperimentConfig::fromFile(*config);
      if (kOpt->count()) cfg.k = *k;
      if (fOpt->count()) cfg.formulas = *formulas;
      if (nOpt->count()) cfg.set("n", *ns);
      if (pOpt->count()) cfg.p = *p;
      if (sOpt->count()) cfg.samples = *samples;
      if (seedOpt->count()) cfg.seed = *seed;
      if (wOpt->count()) cfg.workers = *workers;
      if (csvOpt->count()) cfg.csvPath = *csv;
      if (jsonOpt->count()) cfg.jsonPath = *json;
      const SweepReport report = runConvergenceSweep(cfg);
      const std::string js = sweepJson(report);
      if (!cfg.csvPath.empty()) writeFile(cfg.csvPath, sweepCsv(report));
      if (!cfg.jsonPath.empty()) writeFile(cfg.jsonPath, js);
      out << js;
    });
  }

  void scanCommand() {
    auto* scan = app.add_subcommand("scan-dense", "List small subgraphs denser than a threshold");
    auto* host = str();
    auto* maxV = integer(kScanDefaultMaxV);
    auto* threshold = str();
    scan->add_option("--host", *host, "EDG v1 host")->required();
    scan->add_option("--max-v", *maxV, "consider vertex sets of size below this");
    scan->add_option("--threshold", *threshold, "density threshold as p/q")->required();
    on(scan, [this, host, maxV, threshold] {
      const auto sets = scanDense(io::loadEdg(*host), *maxV, rational(*threshold, "threshold"));
      emit({{"count", sets.size()}, {"sets", sets}});
    });
  }

  std::string* str(const std::string& init = {}) {
    owned.emplace_back(std::make_unique<std::string>(init));
    return owned.back().get();
  }
  int* integer(int init) {
    ownedInt.emplace_back(std::make_unique<int>(init));
    return ownedInt.back().get();
  }
  std::uint64_t* u64(std::uint64_t init) {
    owned64.emplace_back(std::make_unique<std::uint64_t>(init));
    return owned64.back().get();
  }
  bool* flag() {
    ownedBool.emplace_back(std::make_unique<bool>(false));
    return ownedBool.back().get();
  }

  std::vector<std::unique_ptr<std::string>> owned;
  std::vector<std::unique_ptr<int>> ownedInt;
  std::vector<std::unique_ptr<bool>> ownedBool;
  std::vector<std::unique_ptr<std::uint64_t>> owned64;
  std::vector<std::unique_ptr<std::vector<std::string>>> ownedList;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  std::vector<std::string> argvStore{"zol"};
  argvStore.insert(argvStore.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argvStore) argv.push_back(a.c_str());
  try {
    cli.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return cli.app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << cli.app.help();
    return 2;
  }
  try {
    for (const auto& [sub, action] : cli.actions)
      if (sub->parsed()) {
        action();
        return 0;
      }
    err << cli.app.help();
    return 2;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zol
