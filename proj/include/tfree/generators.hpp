#pragma once

#include "tfree/circular_interval.hpp"
#include "tfree/digraph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tfree {

/// Largest vertex count for exhaustive enumeration (3^15 pair states).
inline constexpr std::size_t kExhaustiveLimit = 6;

/// Number of unordered vertex pairs, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// Visitor for enumerations; return false to stop early.
using DigraphVisitor = std::function<bool(const Digraph&)>;

/// Every labeled 3-free digraph on n vertices. Each unordered pair {u, v}
/// (u < v, lexicographic) takes one of three states in order: nonadjacent,
/// u -> v, v -> u; assignments closing a 3-cycle are pruned as soon as the
/// last pair of the triangle is set. Returns false if the visitor stopped
/// the enumeration. Throws SizeLimitError for n > kExhaustiveLimit.
bool enumerate_3free(std::size_t n, const DigraphVisitor& visit);

/// The part of enumerate_3free whose first `prefix_pairs` pair states,
/// read as a base-3 number (first pair most significant), equal `block`.
/// Blocks 0..3^prefix_pairs-1 visited in turn reproduce enumerate_3free.
bool enumerate_3free_block(std::size_t n, std::size_t prefix_pairs, std::size_t block,
                           const DigraphVisitor& visit);

/// Random 3-free digraph. Each pair is u -> v or v -> u with probability p
/// each and nonadjacent otherwise (weights p, p, max(0, 1 - 2p),
/// normalised). Then triples are scanned lexicographically and every
/// directed triangle loses its lexicographically smallest arc.
/// Deterministic in `seed`.
Digraph random_3free(std::size_t n, double arc_probability, std::uint64_t seed);

/// G(n, n, n, n): blocks of n vertices on a 4-cycle of blocks. Beta is n^2
/// and gamma 2n^2.
Digraph extremal_family(std::size_t n);

/// 3-free digraph whose vertex set is the union of two cliques.
struct TwoCliqueInstance {
    Digraph graph;
    std::vector<Vertex> m;
    std::vector<Vertex> n;
};

/// Random labels; each clique is a random transitive tournament. Between
/// pairs are visited in random order and sampled as in random_3free; a
/// sampled arc is dropped if it would close a directed triangle.
TwoCliqueInstance random_two_clique(std::size_t m_size, std::size_t n_size, double arc_probability,
                                    std::uint64_t seed);

/// G(n_0, n_1, n_2, n_3) with sizes drawn from 1..max_block: blocks 0-1
/// and blocks 2-3 are the two cliques. Labels are shuffled and each
/// between-clique arc survives with probability `keep_probability`, so
/// the 4-cycles through all four blocks give many crosses.
TwoCliqueInstance random_blocked_two_clique(std::size_t max_block, double keep_probability, std::uint64_t seed);

/// 3-free circular interval digraph with its order.
struct CircularInstance {
    Digraph graph;
    CircularOrder order;
};

/// Random G(n_0..n_3t) (t <= max_t, sizes <= max_block), randomly
/// relabeled, then thinned by deleting random arcs that sit at the far end
/// of both their tail's out-run and their head's in-run (which keeps the
/// graph circular interval under the same order).
CircularInstance random_circular_interval(std::size_t max_t, std::size_t max_block, std::uint64_t seed);

}  // namespace tfree
