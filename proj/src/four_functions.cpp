#include "tfree/four_functions.hpp"

#include "tfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace tfree {

GridMap::GridMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}

GridMap::GridMap(std::size_t rows, std::size_t cols, std::vector<Rational> values)
    : rows_(rows), cols_(cols), values_(std::move(values))
{
    if (values_.size() != rows * cols) {
        throw ShapeError("grid " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                         std::to_string(rows * cols) + " values, got " + std::to_string(values_.size()));
    }
    for (const Rational& v : values_) {
        if (sgn(v) < 0) {
            throw PreconditionError("grid values must be nonnegative, got " + to_string(v));
        }
    }
}

void GridMap::set(std::size_t row, std::size_t col, Rational value)
{
    if (sgn(value) < 0) {
        throw PreconditionError("grid values must be nonnegative, got " + to_string(value));
    }
    values_.at(index(row, col)) = std::move(value);
}

Rational GridMap::total() const
{
    Rational sum = 0;
    for (const Rational& v : values_) {
        sum += v;
    }
    return sum;
}

std::size_t GridMap::index(std::size_t row, std::size_t col) const
{
    if (row < 1 || row > rows_ || col < 1 || col > cols_) {
        throw ShapeError("grid point (" + std::to_string(row) + "," + std::to_string(col) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return (row - 1) * cols_ + (col - 1);
}

void GridFunctions::validate() const
{
    if (a.rows() == 0 || a.cols() == 0) {
        throw ShapeError("grid dimensions must be positive");
    }
    for (const GridMap* g : {&b, &c, &d}) {
        if (g->rows() != a.rows() || g->cols() != a.cols()) {
            throw ShapeError("grid functions disagree on dimensions");
        }
    }
}

QuadReport quad_check(const Rational& a1, const Rational& a2, const Rational& c1, const Rational& c2,
                      const Rational& d1, const Rational& d2)
{
    for (const Rational* v : {&a1, &a2, &c1, &c2, &d1, &d2}) {
        if (sgn(*v) < 0) {
            throw PreconditionError("quad_check takes nonnegative values");
        }
    }
    QuadReport report;
    if (a1 * a1 > c1 * d1) {
        report.failed_hypothesis = 1;
    } else if (a2 * a2 > c2 * d2) {
        report.failed_hypothesis = 2;
    }
    const Rational sum = a1 + a2;
    report.lhs = sum * sum;
    report.rhs = (c1 + c2) * (d1 + d2);
    report.holds = !report.failed_hypothesis && report.lhs <= report.rhs;
    return report;
}

namespace {

GridPoint point_of(std::size_t flat, std::size_t cols) { return {flat / cols + 1, flat % cols + 1}; }

void require_same_grid(const GridMap& a, const GridMap& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("domination needs both functions on the same grid");
    }
}

bool dominates_by_subsets(const GridMap& a, const GridMap& b)
{
    const std::size_t size = a.size();
    const std::size_t cols = a.cols();
    // below[p]: points dominated by p
    std::vector<std::uint32_t> below(size, 0);
    for (std::size_t p = 0; p < size; ++p) {
        for (std::size_t q = 0; q < size; ++q) {
            if (point_dominates(point_of(p, cols), point_of(q, cols))) {
                below[p] |= std::uint32_t{1} << q;
            }
        }
    }
    const std::uint32_t count = std::uint32_t{1} << size;
    std::vector<std::uint32_t> covered(count, 0);
    Rational b_sum;
    Rational a_sum;
    for (std::uint32_t ys = 1; ys < count; ++ys) {
        const int low = std::countr_zero(ys);
        covered[ys] = covered[ys & (ys - 1)] | below[low];
        // b(Y) <= a(V) - a(X_Y) = a(covered)
        b_sum = 0;
        for (std::uint32_t rest = ys; rest != 0; rest &= rest - 1) {
            b_sum += b[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        a_sum = 0;
        for (std::uint32_t rest = covered[ys]; rest != 0; rest &= rest - 1) {
            a_sum += a[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        if (b_sum > a_sum) {
            return false;
        }
    }
    return true;
}

// Edmonds-Karp on a dense residual matrix.
Rational max_flow(std::vector<std::vector<Rational>>& residual, std::size_t source, std::size_t sink)
{
    const std::size_t nodes = residual.size();
    Rational flow = 0;
    while (true) {
        std::vector<std::size_t> parent(nodes, nodes);
        parent[source] = source;
        std::vector<std::size_t> queue{source};
        for (std::size_t head = 0; head < queue.size() && parent[sink] == nodes; ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v = 0; v < nodes; ++v) {
                if (parent[v] == nodes && sgn(residual[u][v]) > 0) {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if (parent[sink] == nodes) {
            return flow;
        }
        Rational bottleneck = residual[parent[sink]][sink];
        for (std::size_t v = sink; v != source; v = parent[v]) {
            bottleneck = std::min(bottleneck, residual[parent[v]][v]);
        }
        for (std::size_t v = sink; v != source; v = parent[v]) {
            residual[parent[v]][v] -= bottleneck;
            residual[v][parent[v]] += bottleneck;
        }
        flow += bottleneck;
    }
}

}  // namespace

bool dominates_by_flow(const GridMap& a, const GridMap& b)
{
    require_same_grid(a, b);
    const Rational total = a.total();
    if (total != b.total()) {
        return false;
    }
    const std::size_t size = a.size();
    const std::size_t cols = a.cols();
    // nodes: source, b-side points, a-side points, sink
    const std::size_t source = 0;
    const std::size_t sink = 2 * size + 1;
    std::vector<std::vector<Rational>> residual(2 * size + 2, std::vector<Rational>(2 * size + 2));
    const Rational unbounded = total + 1;
    for (std::size_t y = 0; y < size; ++y) {
        residual[source][1 + y] = b[y];
        residual[1 + size + y][sink] = a[y];
        for (std::size_t x = 0; x < size; ++x) {
            if (point_dominates(point_of(y, cols), point_of(x, cols))) {
                residual[1 + y][1 + size + x] = unbounded;
            }
        }
    }
    return max_flow(residual, source, sink) == total;
}

bool dominates(const GridMap& a, const GridMap& b)
{
    require_same_grid(a, b);
    if (a.total() != b.total()) {
        return false;
    }
    if (a.size() > kSubsetDominationLimit) {
        return dominates_by_flow(a, b);
    }
    return dominates_by_subsets(a, b);
}

std::optional<HypothesisViolation> find_hypothesis1_violation(const GridFunctions& q)
{
    q.validate();
    const std::size_t m = q.rows();
    const std::size_t n = q.cols();
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (sgn(q.a.at(i, j)) == 0) {
                continue;
            }
            for (std::size_t i2 = i + 1; i2 <= m; ++i2) {
                for (std::size_t j2 = j + 1; j2 <= n; ++j2) {
                    if (q.a.at(i, j) * q.b.at(i2, j2) > q.c.at(i2, j) * q.d.at(i, j2)) {
                        return HypothesisViolation{{i, j}, {i2, j2}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool check_hypothesis1(const GridFunctions& q) { return !find_hypothesis1_violation(q).has_value(); }

const char* to_string(FourFunctionsStatus status) noexcept
{
    switch (status) {
    case FourFunctionsStatus::holds:
        return "holds";
    case FourFunctionsStatus::hypothesis1_failed:
        return "hypothesis1-failed";
    case FourFunctionsStatus::domination_failed:
        return "domination-failed";
    case FourFunctionsStatus::conclusion_failed:
        return "conclusion-failed";
    }
    return "?";
}

FourFunctionsVerdict verify_four_functions(const GridFunctions& q)
{
    q.validate();
    FourFunctionsVerdict verdict;
    verdict.a_total = q.a.total();
    verdict.b_total = q.b.total();
    verdict.c_total = q.c.total();
    verdict.d_total = q.d.total();
    verdict.margin = verdict.c_total * verdict.d_total - verdict.a_total * verdict.b_total;

    if (const auto bad = find_hypothesis1_violation(q)) {
        verdict.status = FourFunctionsStatus::hypothesis1_failed;
        verdict.detail = "a(" + std::to_string(bad->lower.row) + "," + std::to_string(bad->lower.col) +
                         ") b(" + std::to_string(bad->upper.row) + "," + std::to_string(bad->upper.col) +
                         ") exceeds c(" + std::to_string(bad->upper.row) + "," +
                         std::to_string(bad->lower.col) + ") d(" + std::to_string(bad->lower.row) + "," +
                         std::to_string(bad->upper.col) + ")";
        return verdict;
    }
    if (!dominates(q.a, q.b)) {
        verdict.status = FourFunctionsStatus::domination_failed;
        verdict.detail = verdict.a_total != verdict.b_total ? "a(V) != b(V)" : "b does not dominate a";
        return verdict;
    }
    if (sgn(verdict.margin) < 0) {
        verdict.status = FourFunctionsStatus::conclusion_failed;
        verdict.detail = "a(V) b(V) > c(V) d(V)";
    }
    return verdict;
}

CornerSets corner_sets(std::span<const Cross> matching)
{
    CornerSets out;
    for (const Cross& x : matching) {
        for (const Cross& y : matching) {
            const GridPoint& lower = x.lower;
            const GridPoint& upper = y.upper;
            if (point_dominates(upper, lower)) {
                out.c_points.push_back({upper.row, lower.col});
                out.d_points.push_back({lower.row, upper.col});
            }
        }
    }
    for (auto* pts : {&out.c_points, &out.d_points}) {
        std::sort(pts->begin(), pts->end());
        pts->erase(std::unique(pts->begin(), pts->end()), pts->end());
    }
    return out;
}

GridFunctions grid_from_matching(std::span<const Cross> matching, std::size_t rows, std::size_t cols)
{
    if (rows == 0 || cols == 0) {
        throw ShapeError("grid dimensions must be positive");
    }
    std::vector<GridPoint> endpoints;
    for (const Cross& x : matching) {
        if (!point_dominates(x.upper, x.lower)) {
            throw CertificateError("pair is not a cross: upper point does not dominate lower point");
        }
        for (const GridPoint& p : {x.lower, x.upper}) {
            if (p.row < 1 || p.row > rows || p.col < 1 || p.col > cols) {
                throw CertificateError("cross endpoint outside the grid");
            }
            endpoints.push_back(p);
        }
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end()) {
        throw CertificateError("cross endpoints are not distinct");
    }

    GridFunctions q{GridMap(rows, cols), GridMap(rows, cols), GridMap(rows, cols), GridMap(rows, cols)};
    for (const Cross& x : matching) {
        q.a.set(x.lower.row, x.lower.col, 1);
        q.b.set(x.upper.row, x.upper.col, 1);
    }
    const CornerSets corners = corner_sets(matching);
    for (const GridPoint& p : corners.c_points) {
        q.c.set(p.row, p.col, 1);
    }
    for (const GridPoint& p : corners.d_points) {
        q.d.set(p.row, p.col, 1);
    }
    return q;
}

GridFunctions read_grid_instance(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<std::size_t, std::size_t>> dims;
    std::map<char, std::vector<Rational>> rows_by_name;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head)) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!dims) {
            long long m = 0;
            long long n = 0;
            std::string extra;
            if (head != "grid" || !(tokens >> m >> n) || (tokens >> extra) || m <= 0 || n <= 0) {
                throw ParseError(where + "expected header 'grid <m> <n>'");
            }
            dims.emplace(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
            continue;
        }
        if (head.size() != 2 || head[1] != ':' || std::string_view("abcd").find(head[0]) == std::string_view::npos) {
            throw ParseError(where + "expected 'a:', 'b:', 'c:' or 'd:'");
        }
        if (rows_by_name.contains(head[0])) {
            throw ParseError(where + "function '" + head.substr(0, 1) + "' given twice");
        }
        std::vector<Rational> values;
        std::string token;
        while (tokens >> token) {
            values.push_back(parse_rational(token));
        }
        if (values.size() != dims->first * dims->second) {
            throw ParseError(where + "expected " + std::to_string(dims->first * dims->second) + " values");
        }
        for (const Rational& v : values) {
            if (sgn(v) < 0) {
                throw ParseError(where + "negative value " + to_string(v));
            }
        }
        rows_by_name.emplace(head[0], std::move(values));
    }
    if (!dims) {
        throw ParseError("missing header 'grid <m> <n>'");
    }
    for (char name : {'a', 'b', 'c', 'd'}) {
        if (!rows_by_name.contains(name)) {
            throw ParseError(std::string("missing function '") + name + "'");
        }
    }
    const auto [m, n] = *dims;
    return GridFunctions{GridMap(m, n, std::move(rows_by_name['a'])), GridMap(m, n, std::move(rows_by_name['b'])),
                         GridMap(m, n, std::move(rows_by_name['c'])), GridMap(m, n, std::move(rows_by_name['d']))};
}

GridFunctions parse_grid_instance(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_grid_instance(in);
}

void write_grid_instance(std::ostream& out, const GridFunctions& q)
{
    out << "grid " << q.rows() << ' ' << q.cols() << '\n';
    const std::pair<char, const GridMap*> maps[] = {{'a', &q.a}, {'b', &q.b}, {'c', &q.c}, {'d', &q.d}};
    for (const auto& [name, map] : maps) {
        out << name << ':';
        for (const Rational& v : map->values()) {
            out << ' ' << to_string(v);
        }
        out << '\n';
    }
}

}  // namespace tfree
