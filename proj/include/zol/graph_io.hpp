#pragma once

#include "zol/graph.hpp"
#include "zol/rooted_pair.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace zol::io {

/// Raw contents of an EDG v1 file: `n <N>` then `e <u> <v>` lines, `#` comments.
struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;
};

EdgeList readEdgeList(std::istream& in);
Graph readEdg(std::istream& in);
SparseGraph readEdgSparse(std::istream& in);
void writeEdg(std::ostream& out, const Graph& g);
void writeEdg(std::ostream& out, int n, std::vector<Edge> edges);

/// PAIR v1: `pair k=<k> l=<l>`, `h <u> <v>` for E(H), `g <u> <v>` for E(G) \ E(H).
RootedPair readPair(std::istream& in);
void writePair(std::ostream& out, const RootedPair& p);

Graph loadEdg(const std::string& path);
SparseGraph loadEdgSparse(const std::string& path);
RootedPair loadPair(const std::string& path);

std::string toEdgString(const Graph& g);
std::string toPairString(const RootedPair& p);

}  // namespace zol::io
