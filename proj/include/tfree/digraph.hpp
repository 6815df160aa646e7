#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tfree {

using Vertex = std::uint32_t;

struct Arc {
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Arcs in lexicographic order, no duplicates.
using ArcList = std::vector<Arc>;

class DigraphBuilder;

/// Simple digraph on vertices 0..n-1 with no self-loops and no parallel arcs.
///
/// Adjacency is held as one out-row and one in-row bitset per vertex, so arc
/// membership is O(1); the arc list is kept sorted for deterministic
/// iteration. Values are immutable once built.
class Digraph {
public:
    Digraph() = default;

    /// Graph on `vertex_count` vertices with no arcs.
    explicit Digraph(std::size_t vertex_count);

    /// Throws PreconditionError on a self-loop, an out-of-range label or a
    /// repeated arc.
    Digraph(std::size_t vertex_count, std::span<const Arc> arcs);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const ArcList& arcs() const noexcept { return arcs_; }

    bool has_arc(Vertex u, Vertex v) const noexcept;
    bool adjacent(Vertex u, Vertex v) const noexcept { return has_arc(u, v) || has_arc(v, u); }

    std::size_t out_degree(Vertex v) const noexcept;
    std::size_t in_degree(Vertex v) const noexcept;
    std::vector<Vertex> out_neighbors(Vertex v) const;
    std::vector<Vertex> in_neighbors(Vertex v) const;

    /// Bitset rows, `words_per_row()` 64-bit words each.
    std::span<const std::uint64_t> out_row(Vertex v) const noexcept;
    std::span<const std::uint64_t> in_row(Vertex v) const noexcept;
    std::size_t words_per_row() const noexcept { return words_; }

    /// Out-neighbourhood as a single word; only valid when vertex_count() <= 64.
    std::uint64_t out_mask(Vertex v) const noexcept { return out_[v * words_]; }
    std::uint64_t in_mask(Vertex v) const noexcept { return in_[v * words_]; }

    friend bool operator==(const Digraph& a, const Digraph& b) noexcept
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    friend class DigraphBuilder;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
    ArcList arcs_;
};

/// Mutable staging area for a Digraph. Owned by a single thread.
class DigraphBuilder {
public:
    explicit DigraphBuilder(std::size_t vertex_count);
    explicit DigraphBuilder(const Digraph& g);

    /// Returns false when the arc is already present.
    /// Throws PreconditionError on a self-loop or an out-of-range label.
    bool add_arc(Vertex u, Vertex v);
    bool remove_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const noexcept;

    std::size_t vertex_count() const noexcept { return g_.n_; }
    Digraph build() const;

private:
    Digraph g_;
};

/// Subgraph induced on a vertex subset. Vertex `i` of `graph` is
/// `to_parent[i]` in the parent graph.
struct InducedSubgraph {
    Digraph graph;
    std::vector<Vertex> to_parent;
};

/// Labels in the result follow the order of `vertices`.
InducedSubgraph induced_subgraph(const Digraph& g, std::span<const Vertex> vertices);

/// Maps arcs of the subgraph back to parent labels (result sorted).
ArcList lift_arcs(const InducedSubgraph& sub, std::span<const Arc> arcs);

/// True iff `g` has no directed cycle (topological elimination).
bool is_acyclic(const Digraph& g);

/// A directed cycle of length at most `k`, as a vertex sequence, if one exists.
std::optional<std::vector<Vertex>> find_short_cycle(const Digraph& g, std::size_t k);

/// True iff `g` has no directed cycle of length at most `k`.
bool is_k_free(const Digraph& g, std::size_t k);

struct NonadjacencyReport {
    std::size_t gamma = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;  // u < v, lexicographic
};

NonadjacencyReport gamma(const Digraph& g);

/// Same count as gamma(g).gamma without materialising the pairs.
std::size_t gamma_count(const Digraph& g) noexcept;

/// `g` with the arcs of `x` removed. Throws CertificateError if some arc of
/// `x` is not an arc of `g`.
Digraph remove_arcs(const Digraph& g, std::span<const Arc> x);

/// True iff deleting `x` leaves `g` acyclic. Throws CertificateError if `x`
/// is not a subset of the arcs of `g`.
bool verify_feedback_set(const Digraph& g, std::span<const Arc> x);

/// Sort and deduplicate.
ArcList normalize_arcs(std::vector<Arc> arcs);

}  // namespace tfree
