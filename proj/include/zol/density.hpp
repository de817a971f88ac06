#pragma once

#include "zol/graph.hpp"
#include "zol/rational.hpp"

#include <cstdint>

namespace zol {

/// rho(G) = e(G)/v(G). Throws DomainError for the empty graph.
Rational density(const Graph& g);

/// Maximum density over nonempty vertex-induced subgraphs, computed exactly
/// by parametric min-cut (Dinkelbach iteration over Goldberg's network).
Rational maximalDensity(const Graph& g);

/// A vertex set attaining maximalDensity (the inclusion-minimal one).
std::uint64_t densestSubset(const Graph& g);

/// No subgraph is denser than g.
bool isBalanced(const Graph& g);

/// Every proper nonempty induced subgraph is strictly sparser than g.
bool isStrictlyBalanced(const Graph& g);

}  // namespace zol
