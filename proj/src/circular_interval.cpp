#include "tfree/circular_interval.hpp"

#include "tfree/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tfree {

BlockStructure BlockStructure::from_sizes(std::vector<std::size_t> sizes)
{
    if (sizes.size() < 4 || sizes.size() % 3 != 1) {
        throw ShapeError("block count must be 3t+1 with t >= 1, got " + std::to_string(sizes.size()));
    }
    BlockStructure b;
    b.t = (sizes.size() - 1) / 3;
    b.sizes = std::move(sizes);
    return b;
}

std::size_t BlockStructure::vertex_count() const noexcept
{
    return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

namespace {

std::size_t gap(std::size_t from, std::size_t to, std::size_t s) noexcept { return (to + s - from) % s; }

bool is_forward(std::size_t i, std::size_t j, std::size_t t) noexcept
{
    const std::size_t q = gap(i, j, 3 * t + 1);
    return q >= 1 && q <= t;
}

void require_order(const Digraph& g, std::span<const Vertex> order)
{
    if (order.size() != g.vertex_count()) {
        throw PreconditionError("circular order must list every vertex exactly once");
    }
    std::vector<char> seen(order.size(), 0);
    for (Vertex v : order) {
        if (v >= order.size() || seen[v]) {
            throw PreconditionError("circular order must list every vertex exactly once");
        }
        seen[v] = 1;
    }
}

std::string sizes_text(const std::vector<std::size_t>& sizes)
{
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(sizes[i]);
    }
    return out;
}

}  // namespace

std::vector<std::size_t> clockwise_span(std::size_t i, std::size_t j, std::size_t s)
{
    if (i == j || i >= s || j >= s) {
        throw ShapeError("span needs distinct indices below s");
    }
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < gap(i, j, s); ++p) {
        out.push_back((i + p) % s);
    }
    return out;
}

IndexSets index_sets(std::size_t t)
{
    if (t == 0) {
        throw ShapeError("index sets need t >= 1");
    }
    IndexSets out;
    out.t = t;
    out.s = 3 * t + 1;
    out.cut_pairs.resize(out.s);
    for (std::size_t i = 0; i < out.s; ++i) {
        for (std::size_t j = 0; j < out.s; ++j) {
            if (i == j) {
                continue;
            }
            if (is_forward(i, j, t)) {
                out.forward_pairs.emplace_back(i, j);
                for (std::size_t k : clockwise_span(i, j, out.s)) {
                    out.cut_pairs[k].emplace_back(i, j);
                }
            } else if (i < j && !is_forward(j, i, t)) {
                out.far_pairs.emplace_back(i, j);
            }
        }
    }
    for (auto& pairs : out.cut_pairs) {
        std::sort(pairs.begin(), pairs.end());
    }
    return out;
}

GeneratedGraph generate(const BlockStructure& blocks)
{
    const std::size_t s = blocks.block_count();
    if (s < 4 || s != 3 * blocks.t + 1) {
        throw ShapeError("block structure needs 3t+1 blocks");
    }
    GeneratedGraph out;
    std::vector<std::vector<Vertex>> members(s);
    Vertex next = 0;
    for (std::size_t h = 0; h < s; ++h) {
        for (std::size_t c = 0; c < blocks.sizes[h]; ++c) {
            members[h].push_back(next);
            out.block_of.push_back(h);
            out.order.push_back(next);
            ++next;
        }
    }
    DigraphBuilder b(next);
    for (std::size_t h = 0; h < s; ++h) {
        for (std::size_t x = 0; x < members[h].size(); ++x) {
            for (std::size_t y = x + 1; y < members[h].size(); ++y) {
                b.add_arc(members[h][x], members[h][y]);
            }
        }
        for (std::size_t step = 1; step <= blocks.t; ++step) {
            for (Vertex u : members[h]) {
                for (Vertex v : members[(h + step) % s]) {
                    b.add_arc(u, v);
                }
            }
        }
    }
    out.graph = b.build();
    return out;
}

bool verify_circular_interval(const Digraph& g, std::span<const Vertex> order)
{
    require_order(g, order);
    const std::size_t n = order.size();
    for (std::size_t p = 0; p < n; ++p) {
        const Vertex v = order[p];
        const std::size_t out = g.out_degree(v);
        const std::size_t in = g.in_degree(v);
        for (std::size_t step = 1; step <= out; ++step) {
            if (!g.has_arc(v, order[(p + step) % n])) {
                return false;
            }
        }
        for (std::size_t step = 1; step <= in; ++step) {
            if (!g.has_arc(order[(p + n - step) % n], v)) {
                return false;
            }
        }
    }
    return true;
}

CutIndex best_cut(std::span<const Rational> weights)
{
    if (weights.size() < 4 || weights.size() % 3 != 1) {
        throw ShapeError("cut weights must number 3t+1 with t >= 1, got " + std::to_string(weights.size()));
    }
    for (const Rational& w : weights) {
        if (sgn(w) < 0) {
            throw PreconditionError("cut weights must be nonnegative");
        }
    }
    const IndexSets sets = index_sets((weights.size() - 1) / 3);
    CutIndex out;
    out.half_far_sum = 0;
    for (const auto& [i, j] : sets.far_pairs) {
        out.half_far_sum += weights[i] * weights[j];
    }
    out.half_far_sum /= 2;
    for (std::size_t k = 0; k < sets.s; ++k) {
        Rational value = 0;
        for (const auto& [i, j] : sets.cut_pairs[k]) {
            value += weights[i] * weights[j];
        }
        if (k == 0 || value < out.cut_value) {
            out.k = k;
            out.cut_value = value;
        }
        out.cut_values.push_back(std::move(value));
    }
    return out;
}

ArcList cut_arcs_by_block(const Digraph& g, std::span<const std::size_t> block_of, std::size_t t, std::size_t k)
{
    const std::size_t s = 3 * t + 1;
    if (t == 0 || k >= s || block_of.size() != g.vertex_count()) {
        throw ShapeError("cut index or block assignment out of range");
    }
    ArcList out;
    for (const Arc& a : g.arcs()) {
        const std::size_t i = block_of[a.from];
        const std::size_t j = block_of[a.to];
        if (i == j || !is_forward(i, j, t)) {
            continue;
        }
        if (gap(i, k, s) < gap(i, j, s)) {
            out.push_back(a);
        }
    }
    return out;
}

ArcList cut_arcs(const Digraph& g, const BlockStructure& blocks, std::size_t k)
{
    const GeneratedGraph expected = generate(blocks);
    if (!(expected.graph == g)) {
        throw StructureError("graph is not G(" + sizes_text(blocks.sizes) + ")");
    }
    return cut_arcs_by_block(g, expected.block_of, blocks.t, k);
}

Digraph maximal_completion(const Digraph& g, std::span<const Vertex> order)
{
    if (!is_k_free(g, 3)) {
        throw PreconditionError("completion needs a 3-free graph");
    }
    if (!verify_circular_interval(g, order)) {
        throw PreconditionError("graph is not circular interval under the given order");
    }
    const std::size_t n = order.size();
    std::vector<char> adj(n * n, 0);  // adj[u * n + v]: arc u -> v
    std::vector<std::size_t> out_degree(n);
    std::vector<std::size_t> in_degree(n);
    for (const Arc& a : g.arcs()) {
        adj[a.from * n + a.to] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
        out_degree[v] = g.out_degree(v);
        in_degree[v] = g.in_degree(v);
    }

    // Adding u -> v only changes N+(u) and N-(v); both stay contiguous iff the
    // clockwise gap from u to v is one more than each of those degrees. Any
    // new cycle of length <= 3 must be u -> v -> w -> u.
    const auto addable = [&](std::size_t gap_len, Vertex u, Vertex v) {
        if (adj[u * n + v] || adj[v * n + u]) {
            return false;
        }
        if (out_degree[u] + 1 != gap_len || in_degree[v] + 1 != gap_len) {
            return false;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (adj[v * n + w] && adj[w * n + u]) {
                return false;
            }
        }
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t gap_len = 1; gap_len < n && !changed; ++gap_len) {
            for (std::size_t p = 0; p < n && !changed; ++p) {
                const Vertex u = order[p];
                const Vertex v = order[(p + gap_len) % n];
                if (addable(gap_len, u, v)) {
                    adj[u * n + v] = 1;
                    ++out_degree[u];
                    ++in_degree[v];
                    changed = true;
                }
            }
        }
    }

    DigraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (adj[u * n + v]) {
                b.add_arc(u, v);
            }
        }
    }
    return b.build();
}

namespace {

bool is_tournament(const Digraph& g)
{
    return gamma_count(g) == 0;
}

// Positions a..a+len-1 (mod n) form a cluster: pairwise adjacent, and every
// outside vertex sends arcs to all of them, receives arcs from all of them,
// or is adjacent to none.
bool is_cluster(const Digraph& g, std::span<const Vertex> order, std::size_t a, std::size_t len)
{
    const std::size_t n = order.size();
    std::vector<char> inside(n, 0);
    for (std::size_t p = 0; p < len; ++p) {
        inside[order[(a + p) % n]] = 1;
    }
    for (std::size_t p = 0; p < len; ++p) {
        for (std::size_t q = p + 1; q < len; ++q) {
            if (!g.adjacent(order[(a + p) % n], order[(a + q) % n])) {
                return false;
            }
        }
    }
    for (Vertex w = 0; w < n; ++w) {
        if (inside[w]) {
            continue;
        }
        std::size_t to_w = 0;
        std::size_t from_w = 0;
        for (std::size_t p = 0; p < len; ++p) {
            const Vertex x = order[(a + p) % n];
            to_w += g.has_arc(x, w) ? 1 : 0;
            from_w += g.has_arc(w, x) ? 1 : 0;
        }
        const bool uniform = (from_w == len && to_w == 0) || (to_w == len && from_w == 0) ||
                             (to_w == 0 && from_w == 0);
        if (!uniform) {
            return false;
        }
    }
    return true;
}

}  // namespace

RecognizedStructure recognize_structure(const Digraph& g, std::span<const Vertex> order)
{
    require_order(g, order);
    const std::size_t n = order.size();
    RecognizedStructure out;

    bool has_source_or_sink = n == 0;
    for (Vertex v = 0; v < n; ++v) {
        has_source_or_sink = has_source_or_sink || g.in_degree(v) == 0 || g.out_degree(v) == 0;
    }
    if (has_source_or_sink) {
        if (is_tournament(g) && is_acyclic(g)) {
            out.transitive_tournament = true;
            return out;
        }
        throw StructureError("a vertex has no in- or out-neighbours but the graph is not a transitive tournament");
    }

    // member[p][q]: position q lies in some cluster interval containing position p
    std::vector<std::vector<char>> member(n, std::vector<char>(n, 0));
    for (std::size_t p = 0; p < n; ++p) {
        member[p][p] = 1;
    }
    for (std::size_t len = 2; len < n; ++len) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!is_cluster(g, order, a, len)) {
                continue;
            }
            for (std::size_t x = 0; x < len; ++x) {
                for (std::size_t y = 0; y < len; ++y) {
                    member[(a + x) % n][(a + y) % n] = 1;
                }
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (member[p][q] && member[p] != member[q]) {
                throw StructureError("maximal clusters do not partition the vertices");
            }
        }
    }

    // walk back from position 0 to the start of its cluster
    std::size_t start = 0;
    for (std::size_t steps = 0; steps < n && member[(start + n - 1) % n][0]; ++steps) {
        start = (start + n - 1) % n;
    }
    if (member[(start + n - 1) % n][0]) {
        throw StructureError("whole vertex set is one cluster");
    }

    std::vector<std::size_t> sizes;
    out.block_of.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t pos = (start + p) % n;
        if (p == 0 || !member[pos][(pos + n - 1) % n]) {
            sizes.push_back(0);
        }
        ++sizes.back();
        out.block_of[order[pos]] = sizes.size() - 1;
    }

    const std::size_t s = sizes.size();
    if (s < 4 || s % 3 != 1) {
        throw StructureError(std::to_string(s) + " maximal clusters, expected 3t+1 with t >= 1");
    }
    const std::size_t t = (s - 1) / 3;
    for (const Arc& a : g.arcs()) {
        const std::size_t i = out.block_of[a.from];
        const std::size_t j = out.block_of[a.to];
        if (i != j && !is_forward(i, j, t)) {
            throw StructureError("clusters " + std::to_string(i) + " -> " + std::to_string(j) +
                                 " are joined but not within reach t = " + std::to_string(t));
        }
    }

    BlockStructure blocks = BlockStructure::from_sizes(sizes);
    const GeneratedGraph canonical = generate(blocks);
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) {
        position[order[p]] = p;
    }
    DigraphBuilder relabeled(n);
    for (const Arc& a : g.arcs()) {
        relabeled.add_arc(static_cast<Vertex>((position[a.from] + n - start) % n),
                          static_cast<Vertex>((position[a.to] + n - start) % n));
    }
    if (!(relabeled.build() == canonical.graph)) {
        throw StructureError("graph differs from G(" + sizes_text(sizes) + ")");
    }

    out.blocks = std::move(blocks);
    out.first_position = start;
    return out;
}

CircularFeedback circular_feedback(const Digraph& g, std::span<const Vertex> order)
{
    if (const auto cycle = find_short_cycle(g, 3)) {
        throw PreconditionError("graph is not 3-free");
    }
    if (!verify_circular_interval(g, order)) {
        throw PreconditionError("graph is not circular interval under the given order");
    }
    CircularFeedback out;
    out.completion = maximal_completion(g, order);
    out.structure = recognize_structure(out.completion, order);

    ArcList kept;
    if (!out.structure.transitive_tournament) {
        std::vector<Rational> weights;
        for (std::size_t size : out.structure.blocks->sizes) {
            weights.emplace_back(static_cast<unsigned long>(size));
        }
        out.cut = best_cut(weights);
        if (!out.cut->within_bound()) {
            throw CertificateError("best cut exceeds half the far-pair sum");
        }
        for (const Arc& a : cut_arcs_by_block(out.completion, out.structure.block_of, out.structure.blocks->t,
                                              out.cut->k)) {
            if (g.has_arc(a.from, a.to)) {
                kept.push_back(a);
            }
        }
    }
    out.certificate = make_certificate(g, std::move(kept), "circular-interval", BoundKind::half_gamma);
    return out;
}

}  // namespace tfree
