#pragma once

#include "tfree/rational.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tfree {

/// Point (row, col) of the grid {1..m} x {1..n}; 1-based.
struct GridPoint {
    std::size_t row = 0;
    std::size_t col = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// `upper` dominates `lower`: strictly greater in both coordinates.
constexpr bool point_dominates(const GridPoint& upper, const GridPoint& lower) noexcept
{
    return lower.row < upper.row && lower.col < upper.col;
}

/// A pair of grid points with `upper` dominating `lower`. In a two-clique
/// instance `lower` = (i, j) stands for the arc v_j -> u_i and `upper` =
/// (i', j') for u_i' -> v_j'.
struct Cross {
    GridPoint lower;
    GridPoint upper;

    friend auto operator<=>(const Cross&, const Cross&) = default;
};

/// Nonnegative rational function on an m x n grid, stored row-major.
class GridMap {
public:
    GridMap() = default;
    GridMap(std::size_t rows, std::size_t cols);
    /// Throws ShapeError if `values.size() != rows * cols`, PreconditionError
    /// on a negative value.
    GridMap(std::size_t rows, std::size_t cols, std::vector<Rational> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return values_.size(); }

    const Rational& at(std::size_t row, std::size_t col) const { return values_.at(index(row, col)); }
    const Rational& at(const GridPoint& p) const { return at(p.row, p.col); }
    void set(std::size_t row, std::size_t col, Rational value);

    /// Value by row-major index.
    const Rational& operator[](std::size_t flat) const { return values_[flat]; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    Rational total() const;

    friend bool operator==(const GridMap&, const GridMap&) = default;

private:
    std::size_t index(std::size_t row, std::size_t col) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> values_;
};

/// The quadruple (a, b, c, d) of grid functions sharing one grid.
struct GridFunctions {
    GridMap a;
    GridMap b;
    GridMap c;
    GridMap d;

    std::size_t rows() const noexcept { return a.rows(); }
    std::size_t cols() const noexcept { return a.cols(); }

    /// Throws ShapeError unless all four maps share the grid of `a` and the
    /// grid is nonempty.
    void validate() const;
};

/// Outcome of the two-term inequality check.
struct QuadReport {
    /// 1 or 2 when a_k^2 <= c_k d_k fails for that k.
    std::optional<int> failed_hypothesis;
    Rational lhs;  // (a1 + a2)^2
    Rational rhs;  // (c1 + c2)(d1 + d2)
    bool holds = false;
};

/// If a_k^2 <= c_k d_k for k = 1, 2 then (a1 + a2)^2 <= (c1 + c2)(d1 + d2).
/// A failed premise is reported, not thrown. Negative inputs throw
/// PreconditionError.
QuadReport quad_check(const Rational& a1, const Rational& a2, const Rational& c1,
                      const Rational& c2, const Rational& d1, const Rational& d2);

/// Largest grid (m * n) the subset enumeration in `dominates` handles.
inline constexpr std::size_t kSubsetDominationLimit = 16;

/// True iff b dominates a: a(V) = b(V), and every Y has
/// a(X_Y) + b(Y) <= a(V) where X_Y is the set of points dominated by no
/// member of Y (the largest X with no dominating pair against Y).
///
/// Grids up to kSubsetDominationLimit points enumerate every Y; larger
/// grids use dominates_by_flow.
bool dominates(const GridMap& a, const GridMap& b);

/// Same relation by the supply/demand form b(Y) <= a(N(Y)), decided with an
/// exact max-flow from b-mass to the a-mass it dominates. Any grid size.
bool dominates_by_flow(const GridMap& a, const GridMap& b);

/// a(i,j) b(i',j') <= c(i',j) d(i,j') for all i < i', j < j'.
struct HypothesisViolation {
    GridPoint lower;
    GridPoint upper;
};
std::optional<HypothesisViolation> find_hypothesis1_violation(const GridFunctions& q);
bool check_hypothesis1(const GridFunctions& q);

enum class FourFunctionsStatus {
    holds,                // both hypotheses hold and a(V) b(V) <= c(V) d(V)
    hypothesis1_failed,   // the pointwise product inequality fails
    domination_failed,    // b does not dominate a
    conclusion_failed,    // hypotheses hold but the conclusion does not
};

const char* to_string(FourFunctionsStatus status) noexcept;

struct FourFunctionsVerdict {
    FourFunctionsStatus status = FourFunctionsStatus::holds;
    std::string detail;
    Rational a_total;
    Rational b_total;
    Rational c_total;
    Rational d_total;
    Rational margin;  // c(V) d(V) - a(V) b(V)

    bool ok() const noexcept { return status == FourFunctionsStatus::holds; }
};

/// Checks both hypotheses and then a(V) b(V) <= c(V) d(V). Totals and
/// margin are always filled in.
FourFunctionsVerdict verify_four_functions(const GridFunctions& q);

/// Points (i', j) and (i, j') over all lower = (i, j) in A and
/// upper = (i', j') in B with i < i' and j < j'; sorted, deduplicated.
struct CornerSets {
    std::vector<GridPoint> c_points;
    std::vector<GridPoint> d_points;
};
CornerSets corner_sets(std::span<const Cross> matching);

/// Characteristic functions of A, B, C, D built from a family of crosses.
/// Throws CertificateError if an endpoint repeats, a pair is not a cross,
/// or a point falls outside the m x n grid.
GridFunctions grid_from_matching(std::span<const Cross> matching, std::size_t rows,
                                 std::size_t cols);

// Grid instance text format:
//
//   grid <m> <n>
//   a: <m*n rationals, row-major>
//   b: ...
//   c: ...
//   d: ...
//
// Rationals are `p/q` or integers. Lines starting with '#' and blank lines
// are skipped.

GridFunctions read_grid_instance(std::istream& in);
GridFunctions parse_grid_instance(std::string_view text);
void write_grid_instance(std::ostream& out, const GridFunctions& q);

}  // namespace tfree
