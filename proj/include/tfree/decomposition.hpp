#pragma once

#include "tfree/certificate.hpp"
#include "tfree/digraph.hpp"

#include <cstddef>
#include <vector>

namespace tfree {

// A 2-path is a triple (x, y, z) of distinct vertices with arcs x->y and
// y->z where x and z are nonadjacent.

/// Per-vertex 2-path counts: `f` counts 2-paths starting at the vertex,
/// `g` counts 2-paths through it.
struct PivotStats {
    Vertex vertex = 0;
    std::size_t f = 0;
    std::size_t g = 0;
};

/// Partition of V(G) around a pivot v: out-neighbours (A), in-neighbours (B)
/// and vertices nonadjacent to v (C). Each list is sorted.
struct PivotSplit {
    Vertex pivot = 0;
    std::vector<Vertex> out_side;
    std::vector<Vertex> in_side;
    std::vector<Vertex> nonadjacent;
};

/// One entry per vertex, in label order. Sum of f equals sum of g.
std::vector<PivotStats> two_path_counts(const Digraph& g);

/// Split for the smallest vertex with f(v) <= g(v). Throws EmptyInputError
/// on a graph with no vertices.
PivotSplit choose_pivot(const Digraph& g);

/// Bookkeeping for one level of the recursion in theorem1_feedback.
struct DecompositionLevel {
    std::size_t vertex_count = 0;
    PivotStats pivot;
    std::size_t gamma = 0;
    std::size_t gamma_out_side = 0;   // gamma of the subgraph on A
    std::size_t gamma_remainder = 0;  // gamma of the subgraph on B u C
    std::size_t cut_size = 0;         // arcs from A to C
    bool arc_from_out_to_in = false;  // any arc from A to B
};

/// Feedback arc set of size at most gamma(G) for a 3-free digraph.
///
/// Picks a pivot v with f(v) <= g(v), deletes every arc from A to C, and
/// recurses on the subgraphs induced by A and by B u C. Any arc leaving A
/// then lands in C (there are no A->B arcs without a 3-cycle), so the
/// result is acyclic; the count works out because f(v) <= g(v) and the g(v)
/// nonadjacent A-B pairs are lost from gamma when splitting.
///
/// Throws PreconditionError naming a cycle of length <= 3 when `g` is not
/// 3-free. When `trace` is non-null one entry per recursion level with at
/// least two vertices is appended, in pre-order.
FeedbackCertificate theorem1_feedback(const Digraph& g,
                                      std::vector<DecompositionLevel>* trace = nullptr);

}  // namespace tfree
