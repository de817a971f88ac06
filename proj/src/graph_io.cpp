#include "zol/graph_io.hpp"

#include "zol/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace zol::io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int lineNo, const std::string& what) {
  throw ArgumentError("line " + std::to_string(lineNo) + ": " + what);
}

Edge parseEdge(std::istringstream& ls, int n, int lineNo) {
  long long u = -1;
  long long v = -1;
  std::string rest;
  if (!(ls >> u >> v) || (ls >> rest)) fail(lineNo, "expected two vertex indices");
  if (!(0 <= u && u < v && v < n)) fail(lineNo, "edge endpoints must satisfy 0 <= u < v < n");
  return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

std::ifstream openOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  return in;
}

}  // namespace

EdgeList readEdgeList(std::istream& in) {
  EdgeList out;
  bool haveHeader = false;
  std::set<Edge> seen;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "n") {
      if (haveHeader) fail(lineNo, "duplicate 'n' line");
      long long n = -1;
      std::string rest;
      if (!(ls >> n) || n < 0 || (ls >> rest)) fail(lineNo, "malformed vertex count");
      out.n = static_cast<int>(n);
      haveHeader = true;
    } else if (tag == "e") {
      if (!haveHeader) fail(lineNo, "edge before 'n' line");
      Edge e = parseEdge(ls, out.n, lineNo);
      if (!seen.insert(e).second) fail(lineNo, "repeated edge");
      out.edges.push_back(e);
    } else {
      fail(lineNo, "unknown record '" + tag + "'");
    }
  }
  if (!haveHeader) throw ArgumentError("missing 'n' line");
  return out;
}

Graph readEdg(std::istream& in) {
  auto el = readEdgeList(in);
  return Graph(el.n, el.edges);
}

SparseGraph readEdgSparse(std::istream& in) {
  auto el = readEdgeList(in);
  return SparseGraph(el.n, el.edges);
}

void writeEdg(std::ostream& out, int n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  out << "# EDG v1\n";
  out << "n " << n << '\n';
  for (const Edge& e : edges) out << "e " << e.u << ' ' << e.v << '\n';
}

void writeEdg(std::ostream& out, const Graph& g) { writeEdg(out, g.vertexCount(), g.edges()); }

RootedPair readPair(std::istream& in) {
  int k = -1;
  int l = -1;
  std::vector<Edge> h;
  std::vector<Edge> g;
  std::set<Edge> seen;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "pair") {
      if (k >= 0) fail(lineNo, "duplicate header");
      std::string a;
      std::string b;
      std::string rest;
      if (!(ls >> a >> b) || (ls >> rest) || a.rfind("k=", 0) != 0 || b.rfind("l=", 0) != 0)
        fail(lineNo, "expected 'pair k=<k> l=<l>'");
      try {
        k = std::stoi(a.substr(2));
        l = std::stoi(b.substr(2));
      } catch (const std::exception&) {
        fail(lineNo, "malformed counts in header");
      }
      if (k < 0 || l < k) fail(lineNo, "header requires 0 <= k <= l");
    } else if (tag == "h" || tag == "g") {
      if (k < 0) fail(lineNo, "edge before header");
      Edge e = parseEdge(ls, l, lineNo);
      if (!seen.insert(e).second) fail(lineNo, "repeated edge");
      if (tag == "h") {
        if (e.v >= k) fail(lineNo, "edge of H must join two roots");
        h.push_back(e);
      } else {
        g.push_back(e);
      }
    } else {
      fail(lineNo, "unknown record '" + tag + "'");
    }
  }
  if (k < 0) throw ArgumentError("missing 'pair' header");
  std::vector<Edge> all = h;
  all.insert(all.end(), g.begin(), g.end());
  return RootedPair(Graph(l, all), k, h);
}

void writePair(std::ostream& out, const RootedPair& p) {
  out << "# PAIR v1\n";
  out << "pair k=" << p.rootCount() << " l=" << p.vertexCount() << '\n';
  for (const Edge& e : p.rootEdges()) out << "h " << e.u << ' ' << e.v << '\n';
  for (const Edge& e : p.newEdges()) out << "g " << e.u << ' ' << e.v << '\n';
}

Graph loadEdg(const std::string& path) {
  auto in = openOrThrow(path);
  return readEdg(in);
}

SparseGraph loadEdgSparse(const std::string& path) {
  auto in = openOrThrow(path);
  return readEdgSparse(in);
}

RootedPair loadPair(const std::string& path) {
  auto in = openOrThrow(path);
  return readPair(in);
}

std::string toEdgString(const Graph& g) {
  std::ostringstream os;
  writeEdg(os, g);
  return os.str();
}

std::string toPairString(const RootedPair& p) {
  std::ostringstream os;
  writePair(os, p);
  return os.str();
}

}  // namespace zol::io
