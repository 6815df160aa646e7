#pragma once

#include "tfree/bipartite.hpp"
#include "tfree/certificate.hpp"
#include "tfree/digraph.hpp"
#include "tfree/four_functions.hpp"

#include <span>
#include <vector>

namespace tfree {

/// Two cliques M and N covering V(G), each in its canonical order:
/// u_1..u_m with u_i -> u_i' whenever i < i', and v_1..v_n with
/// v_j' -> v_j whenever j < j' (N is numbered in reverse).
/// `m_order[i-1]` is u_i and `n_order[j-1]` is v_j.
struct CliquePartition {
    std::vector<Vertex> m_order;
    std::vector<Vertex> n_order;
};

/// Orders each side as a transitive tournament. Throws PreconditionError
/// if `g` is not 3-free and PartitionError if (m, n) is not a partition of
/// V(G) into two cliques.
CliquePartition order_cliques(const Digraph& g, std::span<const Vertex> m, std::span<const Vertex> n);

/// Bipartite graph H on the arcs between the cliques. Left vertices are the
/// arcs v_j -> u_i (grid point (i, j)), right vertices the arcs
/// u_i' -> v_j' (grid point (i', j')); a left and right vertex are joined
/// exactly when their points form a cross. Both sides are listed in grid
/// point order.
struct CrossGraph {
    std::vector<Arc> left_arcs;
    std::vector<GridPoint> left_points;
    std::vector<Arc> right_arcs;
    std::vector<GridPoint> right_points;
    BipartiteGraph graph;
};

CrossGraph build_cross_graph(const Digraph& g, const CliquePartition& partition);

/// Maximum cross matching, its Koenig cover and the grid sets derived from
/// it: A and B are the lower and upper ends of the matched crosses, C and D
/// the corner sets.
struct CrossGraphResult {
    std::vector<Cross> matching;
    ArcList cover;
    std::vector<GridPoint> a_points;
    std::vector<GridPoint> b_points;
    std::vector<GridPoint> c_points;
    std::vector<GridPoint> d_points;
};

/// C and D for a family of crosses, checked against the graph: endpoints
/// distinct, each pair a cross of `g`, C and D disjoint, and every point of
/// C or D a nonadjacent (u, v) pair. Throws CertificateError otherwise.
CornerSets witness_sets(const Digraph& g, const CliquePartition& partition,
                        std::span<const Cross> matching);

struct TwoCliqueResult {
    FeedbackCertificate certificate;  // half-gamma bound
    CliquePartition partition;
    CrossGraphResult cross;
    /// Four-functions check on the characteristic functions of A, B, C, D;
    /// its conclusion is k^2 <= |C| |D|.
    FourFunctionsVerdict four_functions;
};

/// Feedback set for a 3-free digraph whose vertices split into cliques M
/// and N: the Koenig cover of the cross graph. Every arc of the result runs
/// between M and N. Errors from order_cliques propagate; a cover that does
/// not leave the graph acyclic raises CertificateError.
TwoCliqueResult two_cliques_feedback(const Digraph& g, std::span<const Vertex> m,
                                     std::span<const Vertex> n);

}  // namespace tfree
