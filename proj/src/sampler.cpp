#include "zol/random_graph.hpp"

#include "zol/errors.hpp"

#include <cmath>
#include <random>

namespace zol {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t sampleSeed(std::uint64_t masterSeed, std::uint64_t index) {
  return mix64(masterSeed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

SparseGraph sampleGraph(int n, double p, std::uint64_t sampleIndex, std::uint64_t masterSeed) {
  if (n < 0) throw ArgumentError("N must be nonnegative");
  if (!(p >= 0 && p <= 1)) throw ArgumentError("edge probability " + std::to_string(p) + " outside [0,1]");
  std::vector<Edge> edges;
  if (p == 1) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SparseGraph(n, edges);
  }
  if (p == 0 || n < 2) return SparseGraph(n, edges);

  std::mt19937_64 rng(sampleSeed(masterSeed, sampleIndex));
  const double logq = std::log1p(-p);
  // Batagelj-Brandes: walk the lower triangle (v, w), w < v, by geometric jumps.
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double skip = std::floor(std::log1p(-r) / logq);
    w += 1 + static_cast<std::int64_t>(std::min(skip, 4e18));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return SparseGraph(n, edges);
}

}  // namespace zol
