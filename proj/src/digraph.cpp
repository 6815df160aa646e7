#include "tfree/digraph.hpp"

#include "tfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tfree {

namespace {

constexpr std::size_t words_for(std::size_t n) noexcept { return (n + 63) / 64; }

bool test_bit(std::span<const std::uint64_t> row, Vertex v) noexcept
{
    return (row[v / 64] >> (v % 64)) & 1U;
}

std::vector<Vertex> bits_of(std::span<const std::uint64_t> row)
{
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits != 0) {
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string arc_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(std::size_t vertex_count)
    : n_(vertex_count),
      words_(words_for(vertex_count)),
      out_(vertex_count * words_, 0),
      in_(vertex_count * words_, 0)
{
}

Digraph::Digraph(std::size_t vertex_count, std::span<const Arc> arcs)
{
    DigraphBuilder builder(vertex_count);
    for (const Arc& a : arcs) {
        if (!builder.add_arc(a.from, a.to)) {
            throw PreconditionError("duplicate arc " + arc_text(a.from, a.to));
        }
    }
    *this = builder.build();
}

bool Digraph::has_arc(Vertex u, Vertex v) const noexcept
{
    if (u >= n_ || v >= n_) {
        return false;
    }
    return test_bit(out_row(u), v);
}

std::size_t Digraph::out_degree(Vertex v) const noexcept
{
    std::size_t d = 0;
    for (std::uint64_t w : out_row(v)) {
        d += static_cast<std::size_t>(std::popcount(w));
    }
    return d;
}

std::size_t Digraph::in_degree(Vertex v) const noexcept
{
    std::size_t d = 0;
    for (std::uint64_t w : in_row(v)) {
        d += static_cast<std::size_t>(std::popcount(w));
    }
    return d;
}

std::vector<Vertex> Digraph::out_neighbors(Vertex v) const { return bits_of(out_row(v)); }

std::vector<Vertex> Digraph::in_neighbors(Vertex v) const { return bits_of(in_row(v)); }

std::span<const std::uint64_t> Digraph::out_row(Vertex v) const noexcept
{
    return {out_.data() + v * words_, words_};
}

std::span<const std::uint64_t> Digraph::in_row(Vertex v) const noexcept
{
    return {in_.data() + v * words_, words_};
}

DigraphBuilder::DigraphBuilder(std::size_t vertex_count) : g_(vertex_count) {}

DigraphBuilder::DigraphBuilder(const Digraph& g) : g_(g) { g_.arcs_.clear(); }

bool DigraphBuilder::add_arc(Vertex u, Vertex v)
{
    if (u == v) {
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    if (u >= g_.n_ || v >= g_.n_) {
        throw PreconditionError("arc " + arc_text(u, v) + " outside vertex range 0.." +
                                std::to_string(g_.n_) + "-1");
    }
    std::uint64_t& word = g_.out_[u * g_.words_ + v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (word & bit) {
        return false;
    }
    word |= bit;
    g_.in_[v * g_.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    return true;
}

bool DigraphBuilder::remove_arc(Vertex u, Vertex v)
{
    if (!has_arc(u, v)) {
        return false;
    }
    g_.out_[u * g_.words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    g_.in_[v * g_.words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    return true;
}

bool DigraphBuilder::has_arc(Vertex u, Vertex v) const noexcept { return g_.has_arc(u, v); }

Digraph DigraphBuilder::build() const
{
    Digraph out = g_;
    out.arcs_.clear();
    for (Vertex u = 0; u < out.n_; ++u) {
        for (Vertex v : out.out_neighbors(u)) {
            out.arcs_.push_back({u, v});
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices)
{
    std::vector<std::int64_t> to_child(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.vertex_count() || to_child[vertices[i]] >= 0) {
            throw PreconditionError("induced subgraph needs distinct in-range vertices");
        }
        to_child[vertices[i]] = static_cast<std::int64_t>(i);
    }
    DigraphBuilder b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.out_neighbors(vertices[i])) {
            if (to_child[w] >= 0) {
                b.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(to_child[w]));
            }
        }
    }
    return {b.build(), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

ArcList lift_arcs(const InducedSubgraph& sub, std::span<const Arc> arcs)
{
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs) {
        out.push_back({sub.to_parent.at(a.from), sub.to_parent.at(a.to)});
    }
    return normalize_arcs(std::move(out));
}

bool is_acyclic(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> indegree(n);
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v) {
        indegree[v] = g.in_degree(v);
        if (indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        const Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex w : g.out_neighbors(v)) {
            if (--indegree[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    return removed == n;
}

namespace {

// Cycles whose smallest vertex is path.front(); extends only through larger labels.
bool extend_path(const Digraph& g, std::vector<Vertex>& path, std::vector<char>& on_path,
                 std::size_t k)
{
    const Vertex start = path.front();
    const Vertex tail = path.back();
    if (g.has_arc(tail, start) && path.size() >= 2) {
        return true;
    }
    if (path.size() >= k) {
        return false;
    }
    for (Vertex w : g.out_neighbors(tail)) {
        if (w <= start || on_path[w]) {
            continue;
        }
        path.push_back(w);
        on_path[w] = 1;
        if (extend_path(g, path, on_path, k)) {
            return true;
        }
        on_path[w] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_short_cycle(const Digraph& g, std::size_t k)
{
    if (k < 2) {
        return std::nullopt;  // no loops by construction
    }
    if (k <= 3) {
        for (const Arc& a : g.arcs()) {
            if (g.has_arc(a.to, a.from)) {
                return std::vector<Vertex>{a.from, a.to};
            }
        }
        if (k == 3) {
            const auto words = g.words_per_row();
            for (const Arc& a : g.arcs()) {
                const auto out_v = g.out_row(a.to);
                const auto in_u = g.in_row(a.from);
                for (std::size_t w = 0; w < words; ++w) {
                    if (const std::uint64_t common = out_v[w] & in_u[w]; common != 0) {
                        const auto x = static_cast<Vertex>(w * 64 + std::countr_zero(common));
                        return std::vector<Vertex>{a.from, a.to, x};
                    }
                }
            }
        }
        return std::nullopt;
    }
    std::vector<char> on_path(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        std::vector<Vertex> path{s};
        on_path[s] = 1;
        if (extend_path(g, path, on_path, k)) {
            return path;
        }
        on_path[s] = 0;
    }
    return std::nullopt;
}

bool is_k_free(const Digraph& g, std::size_t k) { return !find_short_cycle(g, k).has_value(); }

std::size_t gamma_count(const Digraph& g) noexcept
{
    const std::size_t n = g.vertex_count();
    std::size_t adjacent_twice = 0;
    for (Vertex v = 0; v < n; ++v) {
        const auto out = g.out_row(v);
        const auto in = g.in_row(v);
        for (std::size_t w = 0; w < out.size(); ++w) {
            adjacent_twice += static_cast<std::size_t>(std::popcount(out[w] | in[w]));
        }
    }
    return n * (n - (n > 0 ? 1 : 0)) / 2 - adjacent_twice / 2;
}

NonadjacencyReport gamma(const Digraph& g)
{
    NonadjacencyReport report;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                report.pairs.emplace_back(u, v);
            }
        }
    }
    report.gamma = report.pairs.size();
    return report;
}

Digraph remove_arcs(const Digraph& g, std::span<const Arc> x)
{
    DigraphBuilder b(g);
    for (const Arc& a : x) {
        if (!g.has_arc(a.from, a.to)) {
            throw CertificateError("arc " + arc_text(a.from, a.to) + " is not an arc of the graph");
        }
        b.remove_arc(a.from, a.to);
    }
    return b.build();
}

bool verify_feedback_set(const Digraph& g, std::span<const Arc> x)
{
    return is_acyclic(remove_arcs(g, x));
}

ArcList normalize_arcs(std::vector<Arc> arcs)
{
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

}  // namespace tfree
