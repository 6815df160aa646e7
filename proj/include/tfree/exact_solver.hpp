#pragma once

#include "tfree/digraph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tfree {

/// Minimum feedback arc set of a digraph with the ordering that realises it.
/// `witness` is exactly the set of arcs running backward in
/// `elimination_order` (a linear order of all vertices).
struct BetaResult {
    std::size_t beta = 0;
    ArcList witness;
    std::vector<Vertex> elimination_order;
};

inline constexpr std::size_t kDefaultExactLimit = 24;
inline constexpr std::size_t kMaxExactLimit = 30;
inline constexpr std::size_t kOracleLimit = 8;

/// Exact beta by dynamic programming over vertex subsets.
///
/// best(S) is the fewest back-arcs over orderings of S; placing v last
/// costs the arcs from v into S \ {v}. Reconstruction picks the smallest
/// label achieving the optimum at every step, so witnesses are
/// deterministic. Time O(2^n n), memory 2^n 16-bit entries.
///
/// Throws SizeLimitError when the vertex count exceeds `max_vertices`
/// (itself capped at kMaxExactLimit).
BetaResult beta_exact(const Digraph& g, std::size_t max_vertices = kDefaultExactLimit);

/// Minimum back-arc count over all n! vertex orders by explicit enumeration.
/// Independent cross-check for beta_exact; n <= kOracleLimit.
std::size_t beta_oracle_permutations(const Digraph& g);

/// Arcs (u, v) with u placed after v in `order`.
ArcList back_arcs(const Digraph& g, std::span<const Vertex> order);

}  // namespace tfree
