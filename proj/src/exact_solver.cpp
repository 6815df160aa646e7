#include "tfree/exact_solver.hpp"

#include "tfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace tfree {

BetaResult beta_exact(const Digraph& g, std::size_t max_vertices)
{
    const std::size_t n = g.vertex_count();
    const std::size_t limit = std::min(max_vertices, kMaxExactLimit);
    if (n > limit) {
        throw SizeLimitError("exact beta is limited to " + std::to_string(limit) +
                             " vertices, graph has " + std::to_string(n));
    }

    std::vector<std::uint32_t> out(n);
    for (Vertex v = 0; v < n; ++v) {
        out[v] = static_cast<std::uint32_t>(g.out_mask(v));
    }

    const std::uint32_t full = n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    std::vector<std::uint16_t> best(std::size_t{full} + 1, 0);
    for (std::uint32_t set = 1; set <= full && set != 0; ++set) {
        std::uint16_t value = std::numeric_limits<std::uint16_t>::max();
        for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint32_t without = set & ~(1U << v);
            const auto cost = static_cast<std::uint16_t>(best[without] + std::popcount(out[v] & without));
            value = std::min(value, cost);
        }
        best[set] = value;
    }

    BetaResult result;
    result.beta = best[full];
    result.elimination_order.assign(n, 0);
    std::uint32_t set = full;
    for (std::size_t pos = n; pos-- > 0;) {
        for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const std::uint32_t without = set & ~(1U << v);
            if (best[without] + std::popcount(out[v] & without) == best[set]) {
                result.elimination_order[pos] = static_cast<Vertex>(v);
                set = without;
                break;
            }
        }
    }
    result.witness = back_arcs(g, result.elimination_order);
    return result;
}

std::size_t beta_oracle_permutations(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > kOracleLimit) {
        throw SizeLimitError("permutation oracle is limited to " + std::to_string(kOracleLimit) +
                             " vertices, graph has " + std::to_string(n));
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::size_t best = g.arc_count();
    do {
        std::vector<std::size_t> position(n);
        for (std::size_t i = 0; i < n; ++i) {
            position[order[i]] = i;
        }
        std::size_t back = 0;
        for (const Arc& a : g.arcs()) {
            back += position[a.from] > position[a.to] ? 1 : 0;
        }
        best = std::min(best, back);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

ArcList back_arcs(const Digraph& g, std::span<const Vertex> order)
{
    if (order.size() != g.vertex_count()) {
        throw PreconditionError("order must list every vertex exactly once");
    }
    std::vector<std::size_t> position(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= order.size() || position[order[i]] != order.size()) {
            throw PreconditionError("order must list every vertex exactly once");
        }
        position[order[i]] = i;
    }
    ArcList out;
    for (const Arc& a : g.arcs()) {
        if (position[a.from] > position[a.to]) {
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace tfree
