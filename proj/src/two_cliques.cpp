#include "tfree/two_cliques.hpp"

#include "tfree/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tfree {

namespace {

void require_clique(const Digraph& g, std::span<const Vertex> side, const char* name)
{
    for (std::size_t x = 0; x < side.size(); ++x) {
        for (std::size_t y = x + 1; y < side.size(); ++y) {
            if (!g.adjacent(side[x], side[y])) {
                throw PartitionError(std::string(name) + " is not a clique: " + std::to_string(side[x]) +
                                     " and " + std::to_string(side[y]) + " are nonadjacent");
            }
        }
    }
}

// Orders a side by the number of its neighbours inside the side in the
// given direction; in a transitive tournament these counts are 0..k-1.
std::vector<Vertex> order_by_inner_degree(const Digraph& g, std::span<const Vertex> side, bool by_in_degree)
{
    std::vector<std::pair<std::size_t, Vertex>> keyed;
    for (Vertex v : side) {
        std::size_t degree = 0;
        for (Vertex w : side) {
            degree += (by_in_degree ? g.has_arc(w, v) : g.has_arc(v, w)) ? 1 : 0;
        }
        keyed.emplace_back(degree, v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (keyed[i].first != i) {
            throw PreconditionError("clique side is not a transitive tournament");
        }
        out.push_back(keyed[i].second);
    }
    return out;
}

}  // namespace

CliquePartition order_cliques(const Digraph& g, std::span<const Vertex> m, std::span<const Vertex> n)
{
    if (const auto cycle = find_short_cycle(g, 3)) {
        throw PreconditionError("graph is not 3-free");
    }
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < 2; ++s) {
        for (Vertex v : s == 0 ? m : n) {
            if (v >= g.vertex_count()) {
                throw PartitionError("vertex " + std::to_string(v) + " out of range");
            }
            if (side[v] != -1) {
                throw PartitionError("vertex " + std::to_string(v) + " listed twice");
            }
            side[v] = s;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (side[v] == -1) {
            throw PartitionError("vertex " + std::to_string(v) + " is in neither clique");
        }
    }
    require_clique(g, m, "M");
    require_clique(g, n, "N");
    return {order_by_inner_degree(g, m, true), order_by_inner_degree(g, n, false)};
}

CrossGraph build_cross_graph(const Digraph& g, const CliquePartition& partition)
{
    CrossGraph out;
    const auto& us = partition.m_order;
    const auto& vs = partition.n_order;
    for (std::size_t i = 1; i <= us.size(); ++i) {
        for (std::size_t j = 1; j <= vs.size(); ++j) {
            const Vertex u = us[i - 1];
            const Vertex v = vs[j - 1];
            if (g.has_arc(v, u)) {
                out.left_arcs.push_back({v, u});
                out.left_points.push_back({i, j});
            }
            if (g.has_arc(u, v)) {
                out.right_arcs.push_back({u, v});
                out.right_points.push_back({i, j});
            }
        }
    }
    out.graph.left_count = out.left_arcs.size();
    out.graph.right_count = out.right_arcs.size();
    out.graph.adjacency.resize(out.graph.left_count);
    for (std::size_t l = 0; l < out.graph.left_count; ++l) {
        for (std::size_t r = 0; r < out.graph.right_count; ++r) {
            if (point_dominates(out.right_points[r], out.left_points[l])) {
                out.graph.adjacency[l].push_back(r);
            }
        }
    }
    return out;
}

CornerSets witness_sets(const Digraph& g, const CliquePartition& partition, std::span<const Cross> matching)
{
    const auto& us = partition.m_order;
    const auto& vs = partition.n_order;
    const auto u_at = [&](std::size_t i) { return us.at(i - 1); };
    const auto v_at = [&](std::size_t j) { return vs.at(j - 1); };
    for (const Cross& x : matching) {
        if (x.lower.row < 1 || x.upper.row > us.size() || x.lower.col < 1 || x.upper.col > vs.size() ||
            !point_dominates(x.upper, x.lower)) {
            throw CertificateError("matching contains a pair that is not a cross");
        }
        if (!g.has_arc(v_at(x.lower.col), u_at(x.lower.row)) || !g.has_arc(u_at(x.upper.row), v_at(x.upper.col))) {
            throw CertificateError("matching contains a cross whose arcs are missing");
        }
    }
    // endpoint distinctness is enforced by grid_from_matching's checks
    (void)grid_from_matching(matching, std::max<std::size_t>(us.size(), 1), std::max<std::size_t>(vs.size(), 1));

    CornerSets sets = corner_sets(matching);
    std::vector<GridPoint> common;
    std::set_intersection(sets.c_points.begin(), sets.c_points.end(), sets.d_points.begin(), sets.d_points.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
        throw CertificateError("C and D intersect");
    }
    for (const auto* pts : {&sets.c_points, &sets.d_points}) {
        for (const GridPoint& p : *pts) {
            if (g.adjacent(u_at(p.row), v_at(p.col))) {
                throw CertificateError("corner point (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                                       ") is an adjacent pair");
            }
        }
    }
    return sets;
}

TwoCliqueResult two_cliques_feedback(const Digraph& g, std::span<const Vertex> m, std::span<const Vertex> n)
{
    TwoCliqueResult result;
    result.partition = order_cliques(g, m, n);
    const CrossGraph cg = build_cross_graph(g, result.partition);
    const MatchingCover mc = max_matching_and_cover(cg.graph);

    for (const auto& [l, r] : mc.matching) {
        result.cross.matching.push_back({cg.left_points[l], cg.right_points[r]});
        result.cross.a_points.push_back(cg.left_points[l]);
        result.cross.b_points.push_back(cg.right_points[r]);
    }
    std::sort(result.cross.a_points.begin(), result.cross.a_points.end());
    std::sort(result.cross.b_points.begin(), result.cross.b_points.end());

    std::vector<Arc> cover;
    for (std::size_t l : mc.cover_left) {
        cover.push_back(cg.left_arcs[l]);
    }
    for (std::size_t r : mc.cover_right) {
        cover.push_back(cg.right_arcs[r]);
    }
    result.cross.cover = normalize_arcs(std::move(cover));

    const CornerSets corners = witness_sets(g, result.partition, result.cross.matching);
    result.cross.c_points = corners.c_points;
    result.cross.d_points = corners.d_points;

    const std::size_t rows = std::max<std::size_t>(result.partition.m_order.size(), 1);
    const std::size_t cols = std::max<std::size_t>(result.partition.n_order.size(), 1);
    result.four_functions = verify_four_functions(grid_from_matching(result.cross.matching, rows, cols));

    result.certificate = make_certificate(g, result.cross.cover, "two-cliques", BoundKind::half_gamma);
    return result;
}

}  // namespace tfree
