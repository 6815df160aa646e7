#include "tfree/decomposition.hpp"

#include "tfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tfree {

namespace {

std::string cycle_text(const std::vector<Vertex>& cycle)
{
    std::string out;
    for (Vertex v : cycle) {
        out += std::to_string(v) + "->";
    }
    return out + std::to_string(cycle.front());
}

ArcList decompose(const Digraph& g, std::vector<DecompositionLevel>* trace)
{
    if (g.vertex_count() <= 1) {
        return {};
    }
    const PivotSplit split = choose_pivot(g);

    std::vector<Arc> cut;
    for (Vertex a : split.out_side) {
        for (Vertex c : split.nonadjacent) {
            if (g.has_arc(a, c)) {
                cut.push_back({a, c});
            }
        }
    }

    std::vector<Vertex> remainder = split.in_side;
    remainder.insert(remainder.end(), split.nonadjacent.begin(), split.nonadjacent.end());
    std::sort(remainder.begin(), remainder.end());

    const InducedSubgraph out_sub = induced_subgraph(g, split.out_side);
    const InducedSubgraph rest_sub = induced_subgraph(g, remainder);

    if (trace != nullptr) {
        DecompositionLevel level;
        level.vertex_count = g.vertex_count();
        level.pivot = two_path_counts(g)[split.pivot];
        level.gamma = gamma_count(g);
        level.gamma_out_side = gamma_count(out_sub.graph);
        level.gamma_remainder = gamma_count(rest_sub.graph);
        level.cut_size = cut.size();
        for (Vertex a : split.out_side) {
            for (Vertex b : split.in_side) {
                level.arc_from_out_to_in = level.arc_from_out_to_in || g.has_arc(a, b);
            }
        }
        trace->push_back(level);
    }

    const ArcList out_part = lift_arcs(out_sub, decompose(out_sub.graph, trace));
    const ArcList rest_part = lift_arcs(rest_sub, decompose(rest_sub.graph, trace));
    cut.insert(cut.end(), out_part.begin(), out_part.end());
    cut.insert(cut.end(), rest_part.begin(), rest_part.end());
    return normalize_arcs(std::move(cut));
}

}  // namespace

std::vector<PivotStats> two_path_counts(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    const std::size_t words = g.words_per_row();
    std::vector<PivotStats> stats(n);
    for (Vertex v = 0; v < n; ++v) {
        stats[v].vertex = v;
    }
    for (Vertex y = 0; y < n; ++y) {
        const auto out_y = g.out_row(y);
        for (Vertex x : g.in_neighbors(y)) {
            const auto out_x = g.out_row(x);
            const auto in_x = g.in_row(x);
            std::size_t count = 0;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t ends = out_y[w] & ~(out_x[w] | in_x[w]);
                if (w == x / 64) {
                    ends &= ~(std::uint64_t{1} << (x % 64));
                }
                count += static_cast<std::size_t>(std::popcount(ends));
            }
            stats[x].f += count;
            stats[y].g += count;
        }
    }
    return stats;
}

PivotSplit choose_pivot(const Digraph& g)
{
    if (g.vertex_count() == 0) {
        throw EmptyInputError("cannot choose a pivot in a graph with no vertices");
    }
    const auto stats = two_path_counts(g);
    const auto it = std::find_if(stats.begin(), stats.end(),
                                 [](const PivotStats& s) { return s.f <= s.g; });
    // sum f == sum g, so some vertex qualifies
    PivotSplit split;
    split.pivot = it->vertex;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (u == split.pivot) {
            continue;
        }
        if (g.has_arc(split.pivot, u)) {
            split.out_side.push_back(u);
        } else if (g.has_arc(u, split.pivot)) {
            split.in_side.push_back(u);
        } else {
            split.nonadjacent.push_back(u);
        }
    }
    return split;
}

FeedbackCertificate theorem1_feedback(const Digraph& g, std::vector<DecompositionLevel>* trace)
{
    if (const auto cycle = find_short_cycle(g, 3)) {
        throw PreconditionError("graph is not 3-free: cycle " + cycle_text(*cycle));
    }
    return make_certificate(g, decompose(g, trace), "theorem1", BoundKind::gamma);
}

}  // namespace tfree
