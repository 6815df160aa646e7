#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace tfree {

/// Bipartite graph given by left-to-right adjacency lists.
struct BipartiteGraph {
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    std::vector<std::vector<std::size_t>> adjacency;  // per left vertex

    std::size_t edge_count() const noexcept;
};

struct MatchingCover {
    std::vector<std::pair<std::size_t, std::size_t>> matching;  // (left, right), by left
    std::vector<std::size_t> cover_left;
    std::vector<std::size_t> cover_right;

    std::size_t cover_size() const noexcept { return cover_left.size() + cover_right.size(); }
};

/// Maximum matching by repeated augmenting-path search (left vertices
/// scanned in index order), then the Koenig cover: with Z the vertices
/// reachable from unmatched left vertices by alternating paths, the cover is
/// (L \ Z) u (R n Z). |cover| = |matching|.
MatchingCover max_matching_and_cover(const BipartiteGraph& h);

}  // namespace tfree
