#include "tfree/generators.hpp"

#include "tfree/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <string>

namespace tfree {

namespace {

struct PairTable {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    explicit PairTable(std::size_t n)
    {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                pairs.emplace_back(u, v);
            }
        }
    }
};

class Enumerator {
public:
    Enumerator(std::size_t n, const DigraphVisitor& visit) : n_(n), table_(n), visit_(visit) {}

    // Assign states to pairs[index..]; prefix pairs are fixed by the caller.
    bool run(std::size_t index)
    {
        if (index == table_.pairs.size()) {
            return emit();
        }
        for (int state = 0; state < 3; ++state) {
            if (!assign(index, state)) {
                continue;
            }
            const bool keep_going = run(index + 1);
            unassign(index);
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    // Fixes pair `index` to `state`; false if that closes a triangle.
    bool assign(std::size_t index, int state)
    {
        const auto [b, c] = table_.pairs[index];
        if (state == 1) {
            // b -> c closes a -> b -> c -> a
            if ((in_[b] & out_[c]) != 0) {
                return false;
            }
            out_[b] |= bit(c);
            in_[c] |= bit(b);
        } else if (state == 2) {
            // c -> b closes c -> b -> a -> c
            if ((out_[b] & in_[c]) != 0) {
                return false;
            }
            out_[c] |= bit(b);
            in_[b] |= bit(c);
        }
        return true;
    }

    void unassign(std::size_t index)
    {
        const auto [b, c] = table_.pairs[index];
        out_[b] &= ~bit(c);
        in_[c] &= ~bit(b);
        out_[c] &= ~bit(b);
        in_[b] &= ~bit(c);
    }

    std::size_t pair_total() const noexcept { return table_.pairs.size(); }

private:
    static std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << v; }

    bool emit()
    {
        DigraphBuilder b(n_);
        for (Vertex u = 0; u < n_; ++u) {
            for (std::uint64_t rest = out_[u]; rest != 0; rest &= rest - 1) {
                b.add_arc(u, static_cast<Vertex>(std::countr_zero(rest)));
            }
        }
        return visit_(b.build());
    }

    std::size_t n_;
    PairTable table_;
    const DigraphVisitor& visit_;
    std::uint64_t out_[kExhaustiveLimit] = {};
    std::uint64_t in_[kExhaustiveLimit] = {};
};

void require_exhaustive_size(std::size_t n)
{
    if (n > kExhaustiveLimit) {
        throw SizeLimitError("exhaustive enumeration is limited to " + std::to_string(kExhaustiveLimit) +
                             " vertices; use random mode for n = " + std::to_string(n));
    }
}

// Index of the pair state draw: 0 nonadjacent, 1 forward, 2 backward.
int draw_pair_state(std::mt19937_64& rng, double p)
{
    const double forward = std::max(0.0, p);
    const double none = std::max(0.0, 1.0 - 2.0 * forward);
    const double total = 2.0 * forward + none;
    const double r = std::uniform_real_distribution<double>(0.0, total)(rng);
    if (r < forward) {
        return 1;
    }
    if (r < 2.0 * forward) {
        return 2;
    }
    return 0;
}

}  // namespace

bool enumerate_3free_block(std::size_t n, std::size_t prefix_pairs, std::size_t block,
                           const DigraphVisitor& visit)
{
    require_exhaustive_size(n);
    Enumerator e(n, visit);
    if (prefix_pairs > e.pair_total()) {
        throw ShapeError("prefix longer than the pair list");
    }
    std::vector<int> states(prefix_pairs);
    for (std::size_t i = prefix_pairs; i-- > 0;) {
        states[i] = static_cast<int>(block % 3);
        block /= 3;
    }
    if (block != 0) {
        throw ShapeError("block index out of range");
    }
    for (std::size_t i = 0; i < prefix_pairs; ++i) {
        if (!e.assign(i, states[i])) {
            return true;  // prefix already contains a directed triangle
        }
    }
    return e.run(prefix_pairs);
}

bool enumerate_3free(std::size_t n, const DigraphVisitor& visit)
{
    return enumerate_3free_block(n, 0, 0, visit);
}

Digraph random_3free(std::size_t n, double arc_probability, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    DigraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int state = draw_pair_state(rng, arc_probability);
            if (state == 1) {
                b.add_arc(u, v);
            } else if (state == 2) {
                b.add_arc(v, u);
            }
        }
    }
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex x = a + 1; x < n; ++x) {
            for (Vertex y = x + 1; y < n; ++y) {
                if (b.has_arc(a, x) && b.has_arc(x, y) && b.has_arc(y, a)) {
                    b.remove_arc(a, x);
                } else if (b.has_arc(a, y) && b.has_arc(y, x) && b.has_arc(x, a)) {
                    b.remove_arc(a, y);
                }
            }
        }
    }
    return b.build();
}

Digraph extremal_family(std::size_t n)
{
    return generate(BlockStructure::from_sizes({n, n, n, n})).graph;
}

TwoCliqueInstance random_two_clique(std::size_t m_size, std::size_t n_size, double arc_probability,
                                    std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::size_t total = m_size + n_size;
    std::vector<Vertex> labels(total);
    std::iota(labels.begin(), labels.end(), Vertex{0});
    std::shuffle(labels.begin(), labels.end(), rng);

    TwoCliqueInstance out;
    out.m.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(m_size));
    out.n.assign(labels.begin() + static_cast<std::ptrdiff_t>(m_size), labels.end());

    DigraphBuilder b(total);
    for (const auto* side : {&out.m, &out.n}) {
        // labels are already shuffled, so list order is a random linear order
        for (std::size_t x = 0; x < side->size(); ++x) {
            for (std::size_t y = x + 1; y < side->size(); ++y) {
                b.add_arc((*side)[x], (*side)[y]);
            }
        }
    }
    // Between pairs are drawn in a random order and an arc is kept only if
    // it closes no directed triangle with the arcs already present.
    std::vector<std::pair<Vertex, Vertex>> between;
    for (Vertex u : out.m) {
        for (Vertex v : out.n) {
            between.emplace_back(u, v);
        }
    }
    std::shuffle(between.begin(), between.end(), rng);
    for (const auto& [u, v] : between) {
        const int state = draw_pair_state(rng, arc_probability);
        if (state == 0) {
            continue;
        }
        const Vertex from = state == 1 ? u : v;
        const Vertex to = state == 1 ? v : u;
        bool closes = false;
        for (Vertex w = 0; w < total && !closes; ++w) {
            closes = b.has_arc(to, w) && b.has_arc(w, from);
        }
        if (!closes) {
            b.add_arc(from, to);
        }
    }
    std::sort(out.m.begin(), out.m.end());
    std::sort(out.n.begin(), out.n.end());
    out.graph = b.build();
    return out;
}

TwoCliqueInstance random_blocked_two_clique(std::size_t max_block, double keep_probability, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(max_block, 1));
    const std::vector<std::size_t> sizes = {size(rng), size(rng), size(rng), size(rng)};
    const GeneratedGraph base = generate(BlockStructure::from_sizes(sizes));
    const std::size_t n = base.graph.vertex_count();

    std::vector<Vertex> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Vertex{0});
    std::shuffle(relabel.begin(), relabel.end(), rng);

    TwoCliqueInstance out;
    std::bernoulli_distribution keep(keep_probability);
    DigraphBuilder b(n);
    for (const Arc& a : base.graph.arcs()) {
        const bool from_m = base.block_of[a.from] < 2;
        const bool to_m = base.block_of[a.to] < 2;
        if (from_m == to_m || keep(rng)) {
            b.add_arc(relabel[a.from], relabel[a.to]);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        (base.block_of[v] < 2 ? out.m : out.n).push_back(relabel[v]);
    }
    std::sort(out.m.begin(), out.m.end());
    std::sort(out.n.begin(), out.n.end());
    out.graph = b.build();
    return out;
}

CircularInstance random_circular_interval(std::size_t max_t, std::size_t max_block, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::size_t t = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(max_t, 1))(rng);
    std::vector<std::size_t> sizes(3 * t + 1);
    for (auto& s : sizes) {
        s = std::uniform_int_distribution<std::size_t>(0, max_block)(rng);
    }
    const GeneratedGraph base = generate(BlockStructure::from_sizes(sizes));
    const std::size_t n = base.graph.vertex_count();

    std::vector<Vertex> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Vertex{0});
    std::shuffle(relabel.begin(), relabel.end(), rng);

    CircularInstance out;
    for (Vertex v : base.order) {
        out.order.push_back(relabel[v]);
    }
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) {
        position[out.order[p]] = p;
    }
    DigraphBuilder b(n);
    std::vector<std::size_t> out_run(n, 0);
    std::vector<std::size_t> in_run(n, 0);
    for (const Arc& a : base.graph.arcs()) {
        b.add_arc(relabel[a.from], relabel[a.to]);
        ++out_run[relabel[a.from]];
        ++in_run[relabel[a.to]];
    }

    const std::size_t deletions = n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n)(rng);
    for (std::size_t d = 0; d < deletions; ++d) {
        std::vector<Arc> removable;
        for (Vertex u = 0; u < n; ++u) {
            if (out_run[u] == 0) {
                continue;
            }
            const Vertex v = out.order[(position[u] + out_run[u]) % n];
            if (in_run[v] > 0 && out.order[(position[v] + n - in_run[v]) % n] == u) {
                removable.push_back({u, v});
            }
        }
        if (removable.empty()) {
            break;
        }
        const Arc victim = removable[std::uniform_int_distribution<std::size_t>(0, removable.size() - 1)(rng)];
        b.remove_arc(victim.from, victim.to);
        --out_run[victim.from];
        --in_run[victim.to];
    }
    out.graph = b.build();
    return out;
}

}  // namespace tfree
