#include "oracles.hpp"

#include "tfree/circular_interval.hpp"
#include "tfree/decomposition.hpp"
#include "tfree/edge_list.hpp"
#include "tfree/errors.hpp"
#include "tfree/exact_solver.hpp"
#include "tfree/generators.hpp"

#include <doctest.h>

using namespace tfree;

namespace {

const Digraph kFourCycle = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0\n");

// 2-paths counted straight from the definition.
std::pair<std::size_t, std::size_t> naive_f_g(const Digraph& g, Vertex v)
{
    const oracle::Matrix m = oracle::matrix_of(g);
    const std::size_t n = g.vertex_count();
    std::size_t f = 0;
    std::size_t through = 0;
    for (Vertex y = 0; y < n; ++y) {
        for (Vertex z = 0; z < n; ++z) {
            if (z == v || z == y || y == v) {
                continue;
            }
            if (m[v][y] && m[y][z] && !m[v][z] && !m[z][v]) {
                ++f;
            }
            if (m[y][v] && m[v][z] && !m[y][z] && !m[z][y]) {
                ++through;
            }
        }
    }
    return {f, through};
}

}  // namespace

TEST_CASE("two-path counts")
{
    for (const PivotStats& s : two_path_counts(kFourCycle)) {
        CHECK(s.f == 1);
        CHECK(s.g == 1);
    }
    const Digraph single = parse_edge_list("n 3\n0 1\n");
    CHECK(two_path_counts(single)[0].f == 0);
    CHECK(two_path_counts(single)[0].g == 0);

    enumerate_3free(4, [](const Digraph& g) {
        std::size_t f_sum = 0;
        std::size_t g_sum = 0;
        for (const PivotStats& s : two_path_counts(g)) {
            const auto [f, through] = naive_f_g(g, s.vertex);
            CHECK(s.f == f);
            CHECK(s.g == through);
            f_sum += s.f;
            g_sum += s.g;
        }
        CHECK(f_sum == g_sum);
        return true;
    });
}

TEST_CASE("pivot choice")
{
    const PivotSplit c4 = choose_pivot(kFourCycle);
    CHECK(c4.pivot == 0);
    CHECK(c4.out_side == std::vector<Vertex>{1});
    CHECK(c4.in_side == std::vector<Vertex>{3});
    CHECK(c4.nonadjacent == std::vector<Vertex>{2});

    const PivotSplit tt = choose_pivot(parse_edge_list("n 3\n0 1\n1 2\n0 2\n"));
    CHECK(tt.pivot == 0);
    CHECK(tt.out_side == std::vector<Vertex>{1, 2});
    CHECK(tt.in_side.empty());
    CHECK(tt.nonadjacent.empty());

    const PivotSplit iso = choose_pivot(Digraph(2));
    CHECK(iso.pivot == 0);
    CHECK(iso.nonadjacent == std::vector<Vertex>{1});

    CHECK_THROWS_AS(choose_pivot(Digraph(0)), EmptyInputError);
}

TEST_CASE("decomposition certificate on fixed graphs")
{
    const FeedbackCertificate c4 = theorem1_feedback(kFourCycle);
    CHECK(c4.arcs == ArcList{{1, 2}});
    CHECK(c4.gamma == 2);
    CHECK(c4.algorithm == "theorem1");
    CHECK(theorem1_feedback(generate(BlockStructure::from_sizes({1, 1, 1, 1})).graph).arcs == c4.arcs);

    CHECK(theorem1_feedback(parse_edge_list("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")).arcs.empty());
    CHECK(theorem1_feedback(Digraph(0)).arcs.empty());
    CHECK(theorem1_feedback(Digraph(1)).arcs.empty());

    try {
        theorem1_feedback(parse_edge_list("n 4\n0 1\n1 2\n2 0\n"));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("0") != std::string::npos);
    }
}

TEST_CASE("property: per-level accounting on all 3-free digraphs with n <= 5")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        enumerate_3free(n, [](const Digraph& g) {
            std::vector<DecompositionLevel> trace;
            const FeedbackCertificate cert = theorem1_feedback(g, &trace);
            CHECK(cert.size() <= gamma_count(g));
            CHECK(verify_feedback_set(g, cert.arcs));
            std::size_t cut_total = 0;
            for (const DecompositionLevel& level : trace) {
                CHECK(level.cut_size == level.pivot.f);
                CHECK(level.pivot.f <= level.pivot.g);
                CHECK(level.gamma >= level.gamma_out_side + level.gamma_remainder + level.pivot.g);
                CHECK_FALSE(level.arc_from_out_to_in);
                cut_total += level.cut_size;
            }
            CHECK(cut_total == cert.size());
            return true;
        });
    }
}

TEST_CASE("property: random 3-free digraphs up to 14 vertices")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Digraph g = random_3free(6 + seed % 9, 0.1 + 0.002 * static_cast<double>(seed), seed);
        const FeedbackCertificate cert = theorem1_feedback(g);
        CHECK(cert.within_bound());
        CHECK(verify_feedback_set(g, cert.arcs));
        if (g.vertex_count() <= 10) {
            CHECK(beta_exact(g).beta <= cert.size());
        }
    }
}
