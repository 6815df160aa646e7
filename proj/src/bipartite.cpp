#include "tfree/bipartite.hpp"

#include "tfree/errors.hpp"

namespace tfree {

std::size_t BipartiteGraph::edge_count() const noexcept
{
    std::size_t count = 0;
    for (const auto& row : adjacency) {
        count += row.size();
    }
    return count;
}

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

bool augment(const BipartiteGraph& h, std::size_t left, std::vector<char>& seen,
             std::vector<std::size_t>& match_of_right, std::vector<std::size_t>& match_of_left)
{
    for (std::size_t right : h.adjacency[left]) {
        if (seen[right]) {
            continue;
        }
        seen[right] = 1;
        if (match_of_right[right] == kUnmatched ||
            augment(h, match_of_right[right], seen, match_of_right, match_of_left)) {
            match_of_right[right] = left;
            match_of_left[left] = right;
            return true;
        }
    }
    return false;
}

}  // namespace

MatchingCover max_matching_and_cover(const BipartiteGraph& h)
{
    if (h.adjacency.size() != h.left_count) {
        throw ShapeError("bipartite adjacency must have one list per left vertex");
    }
    for (const auto& row : h.adjacency) {
        for (std::size_t r : row) {
            if (r >= h.right_count) {
                throw ShapeError("bipartite edge to a right vertex out of range");
            }
        }
    }

    std::vector<std::size_t> match_of_right(h.right_count, kUnmatched);
    std::vector<std::size_t> match_of_left(h.left_count, kUnmatched);
    for (std::size_t left = 0; left < h.left_count; ++left) {
        std::vector<char> seen(h.right_count, 0);
        augment(h, left, seen, match_of_right, match_of_left);
    }

    // alternating reachability from unmatched left vertices
    std::vector<char> left_reached(h.left_count, 0);
    std::vector<char> right_reached(h.right_count, 0);
    std::vector<std::size_t> stack;
    for (std::size_t left = 0; left < h.left_count; ++left) {
        if (match_of_left[left] == kUnmatched) {
            left_reached[left] = 1;
            stack.push_back(left);
        }
    }
    while (!stack.empty()) {
        const std::size_t left = stack.back();
        stack.pop_back();
        for (std::size_t right : h.adjacency[left]) {
            if (right_reached[right]) {
                continue;
            }
            right_reached[right] = 1;
            const std::size_t next = match_of_right[right];
            if (next != kUnmatched && !left_reached[next]) {
                left_reached[next] = 1;
                stack.push_back(next);
            }
        }
    }

    MatchingCover out;
    for (std::size_t left = 0; left < h.left_count; ++left) {
        if (match_of_left[left] != kUnmatched) {
            out.matching.emplace_back(left, match_of_left[left]);
        }
        if (!left_reached[left]) {
            out.cover_left.push_back(left);
        }
    }
    for (std::size_t right = 0; right < h.right_count; ++right) {
        if (right_reached[right]) {
            out.cover_right.push_back(right);
        }
    }
    return out;
}

}  // namespace tfree
