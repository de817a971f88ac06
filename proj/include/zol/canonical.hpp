#pragma once

#include "zol/graph.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace zol {

/// Isomorphism-invariant certificate of a (vertex-colored) graph.
struct CanonicalForm {
  int n = 0;
  std::vector<int> colors;           // color of each canonical position
  std::vector<std::uint64_t> rows;   // adjacency rows under the canonical labeling

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical labeling by color refinement plus individualization backtracking.
/// Returns perm with perm[v] = canonical position of v. `colors` (optional)
/// gives an initial vertex coloring that isomorphisms must preserve.
std::vector<Vertex> canonicalLabeling(const Graph& g, std::span<const int> colors = {});

CanonicalForm canonicalForm(const Graph& g, std::span<const int> colors = {});

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace zol
