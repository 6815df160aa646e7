#pragma once

#include "tfree/certificate.hpp"
#include "tfree/digraph.hpp"
#include "tfree/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tfree {

// Circular interval digraphs: the vertices sit on a circle and every
// out-neighbourhood is the run of vertices just clockwise of its owner,
// every in-neighbourhood the run just anticlockwise.

/// Block sizes n_0..n_{3t} of the canonical graph G(n_0, ..., n_{3t}).
struct BlockStructure {
    std::size_t t = 0;
    std::vector<std::size_t> sizes;

    /// Throws ShapeError unless sizes.size() = 3t + 1 for some t >= 1.
    static BlockStructure from_sizes(std::vector<std::size_t> sizes);

    std::size_t block_count() const noexcept { return sizes.size(); }
    std::size_t vertex_count() const noexcept;

    friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

/// Vertex sequence read cyclically; order[p] is the vertex at position p.
using CircularOrder = std::vector<Vertex>;

/// Index machinery on s = 3t + 1 blocks.
///
/// For distinct i, j the span D(ij) is {i, i+1, ..., j-1} mod s. Forward
/// pairs (E) have |D(ij)| <= t; far pairs (F) are unordered pairs with
/// neither direction forward; cut(k) lists the forward pairs whose span
/// contains k.
struct IndexSets {
    std::size_t t = 0;
    std::size_t s = 0;
    std::vector<std::pair<std::size_t, std::size_t>> forward_pairs;
    std::vector<std::pair<std::size_t, std::size_t>> far_pairs;  // i < j
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cut_pairs;
};

/// D(ij) for distinct i, j < s, in clockwise order starting at i.
std::vector<std::size_t> clockwise_span(std::size_t i, std::size_t j, std::size_t s);

/// Throws ShapeError for t = 0.
IndexSets index_sets(std::size_t t);

/// G(n_0, ..., n_{3t}) with its circular order.
struct GeneratedGraph {
    Digraph graph;
    CircularOrder order;
    std::vector<std::size_t> block_of;  // per vertex
};

/// Vertices are numbered block by block; inside a block arcs run forward by
/// label, and block h sends every arc to each of the next t blocks
/// clockwise. The identity order is returned.
GeneratedGraph generate(const BlockStructure& blocks);

/// True iff every out-neighbourhood is the contiguous run just after its
/// vertex and every in-neighbourhood the run just before it, cyclically.
/// Throws PreconditionError if `order` is not a permutation of V(G).
bool verify_circular_interval(const Digraph& g, std::span<const Vertex> order);

/// Cut values for every k and the minimising one.
struct CutIndex {
    std::size_t k = 0;
    Rational cut_value;                 // sum over cut(k) of w_i w_j
    Rational half_far_sum;              // half the sum over far pairs of w_i w_j
    std::vector<Rational> cut_values;   // indexed by k

    bool within_bound() const { return cut_value <= half_far_sum; }
};

/// Smallest k minimising the cut value. Weights must be nonnegative and
/// number 3t + 1 for some t >= 1 (ShapeError otherwise).
CutIndex best_cut(std::span<const Rational> weights);

/// Arcs from block i to block j for every (i, j) in cut(k). Verifies that
/// `g` is exactly G(blocks) (StructureError otherwise).
ArcList cut_arcs(const Digraph& g, const BlockStructure& blocks, std::size_t k);

/// Same, for an arbitrary assignment of vertices to blocks 0..3t.
ArcList cut_arcs_by_block(const Digraph& g, std::span<const std::size_t> block_of, std::size_t t,
                          std::size_t k);

/// Adds arcs until no nonadjacent pair can take an arc that keeps the graph
/// 3-free and circular interval under the same `order`. Pairs are tried by
/// clockwise gap length, then start position; the scan restarts after each
/// addition. Throws PreconditionError unless `g` is 3-free and circular
/// interval under `order`.
Digraph maximal_completion(const Digraph& g, std::span<const Vertex> order);

/// Shape of a maximal 3-free circular interval digraph.
struct RecognizedStructure {
    bool transitive_tournament = false;
    std::optional<BlockStructure> blocks;
    /// Per vertex: index of its maximal cluster; block 0 contains order[0].
    std::vector<std::size_t> block_of;
    /// Position in `order` where block 0 starts.
    std::size_t first_position = 0;
};

/// Transitive tournament, or the block sizes of G(n_0, ..., n_{3t}) read off
/// the maximal clusters. The result is confirmed by rebuilding the canonical
/// graph and comparing arc for arc; anything else raises StructureError
/// with a description of what failed.
RecognizedStructure recognize_structure(const Digraph& g, std::span<const Vertex> order);

struct CircularFeedback {
    FeedbackCertificate certificate;  // half-gamma bound
    Digraph completion;
    RecognizedStructure structure;
    std::optional<CutIndex> cut;      // absent for tournaments
};

/// Feedback set for a 3-free circular interval digraph: complete it to a
/// maximal graph, cut the canonical block graph at its best index, and keep
/// the cut arcs that belong to `g`.
CircularFeedback circular_feedback(const Digraph& g, std::span<const Vertex> order);

}  // namespace tfree
