#include "oracles.hpp"

#include "tfree/certificate.hpp"
#include "tfree/digraph.hpp"
#include "tfree/edge_list.hpp"
#include "tfree/errors.hpp"

#include <doctest.h>

#include <random>

using namespace tfree;

namespace {

Digraph four_cycle() { return parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0\n"); }

}  // namespace

TEST_CASE("digraph construction and queries")
{
    const Digraph g = four_cycle();
    CHECK(g.vertex_count() == 4);
    CHECK(g.arc_count() == 4);
    CHECK(g.has_arc(0, 1));
    CHECK_FALSE(g.has_arc(1, 0));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.out_neighbors(3) == std::vector<Vertex>{0});
    CHECK(g.in_neighbors(0) == std::vector<Vertex>{3});
    CHECK(g.out_degree(2) == 1);
    CHECK(g.in_degree(2) == 1);

    const Arc loop[] = {{1, 1}};
    CHECK_THROWS_AS(Digraph(3, loop), PreconditionError);
    const Arc twice[] = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(Digraph(3, twice), PreconditionError);
    const Arc outside[] = {{0, 3}};
    CHECK_THROWS_AS(Digraph(3, outside), PreconditionError);
}

TEST_CASE("builder round trip")
{
    DigraphBuilder b(3);
    CHECK(b.add_arc(0, 1));
    CHECK_FALSE(b.add_arc(0, 1));
    CHECK(b.add_arc(2, 1));
    CHECK(b.remove_arc(2, 1));
    CHECK_FALSE(b.remove_arc(2, 1));
    CHECK_THROWS_AS(b.add_arc(2, 2), PreconditionError);
    const Digraph g = b.build();
    CHECK(g.arcs() == ArcList{{0, 1}});
    CHECK(DigraphBuilder(g).build() == g);
}

TEST_CASE("wide graphs use several words per row")
{
    DigraphBuilder b(130);
    b.add_arc(0, 129);
    b.add_arc(129, 64);
    const Digraph g = b.build();
    CHECK(g.words_per_row() == 3);
    CHECK(g.has_arc(0, 129));
    CHECK(g.out_neighbors(129) == std::vector<Vertex>{64});
    CHECK(gamma_count(g) == 130 * 129 / 2 - 2);
}

TEST_CASE("short cycles")
{
    const Digraph c4 = four_cycle();
    CHECK(is_k_free(c4, 3));
    CHECK_FALSE(is_k_free(c4, 4));
    const auto cycle = find_short_cycle(c4, 4);
    REQUIRE(cycle);
    CHECK(cycle->size() == 4);

    const Digraph digon = parse_edge_list("n 2\n0 1\n1 0\n");
    CHECK_FALSE(is_k_free(digon, 3));
    CHECK(find_short_cycle(digon, 3)->size() == 2);

    const Digraph triangle = parse_edge_list("n 5\n3 4\n4 1\n1 3\n");
    const auto t = find_short_cycle(triangle, 3);
    REQUIRE(t);
    CHECK(t->size() == 3);
}

TEST_CASE("acyclicity and gamma agree with the oracles on random digraphs")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + round % 8;
        const Digraph g = oracle::random_digraph(n, 0.25, rng);
        const oracle::Matrix m = oracle::matrix_of(g);
        CHECK(is_acyclic(g) == oracle::is_acyclic(m));
        CHECK(is_k_free(g, 3) == !oracle::has_cycle_up_to_3(m));
        CHECK(gamma(g).gamma == oracle::gamma(m));
        CHECK(gamma_count(g) == oracle::gamma(m));
    }
}

TEST_CASE("gamma lists nonadjacent pairs in order")
{
    const NonadjacencyReport r = gamma(four_cycle());
    CHECK(r.gamma == 2);
    CHECK(r.pairs == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}});
}

TEST_CASE("induced subgraphs keep the requested label order")
{
    const Digraph g = four_cycle();
    const Vertex keep[] = {3, 0, 1};
    const InducedSubgraph sub = induced_subgraph(g, keep);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.has_arc(0, 1));  // 3 -> 0
    CHECK(sub.graph.has_arc(1, 2));  // 0 -> 1
    CHECK(sub.graph.arc_count() == 2);
    const Arc local[] = {{1, 2}, {0, 1}};
    CHECK(lift_arcs(sub, local) == ArcList{{0, 1}, {3, 0}});
}

TEST_CASE("feedback sets")
{
    const Digraph g = four_cycle();
    const Arc one[] = {{2, 3}};
    CHECK(verify_feedback_set(g, one));
    CHECK_FALSE(verify_feedback_set(g, std::span<const Arc>{}));
    const Arc foreign[] = {{0, 2}};
    CHECK_THROWS_AS(verify_feedback_set(g, foreign), CertificateError);
    CHECK(remove_arcs(g, one).arc_count() == 3);
    CHECK(normalize_arcs({{2, 3}, {0, 1}, {2, 3}}) == ArcList{{0, 1}, {2, 3}});
}

TEST_CASE("certificates record the bound without enforcing it")
{
    const Digraph g = four_cycle();
    const FeedbackCertificate cert = make_certificate(g, {{3, 0}, {1, 2}}, "test", BoundKind::half_gamma);
    CHECK(cert.gamma == 2);
    CHECK(cert.limit == 1);
    CHECK(cert.size() == 2);
    CHECK_FALSE(cert.within_bound());
    CHECK(cert.arcs == ArcList{{1, 2}, {3, 0}});
    CHECK_THROWS_AS(make_certificate(g, {}, "test", BoundKind::gamma), CertificateError);
}

TEST_CASE("edge list parsing")
{
    const Digraph g = parse_edge_list("# a comment\n\n  \nn 3\n0 1\n# inline\n2 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.arcs() == ArcList{{0, 1}, {2, 1}});
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(to_edge_list(g) == "n 3\n0 1\n2 1\n");

    CHECK_THROWS_AS(parse_edge_list("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 1 5\n"), ParseError);
    CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.txt"), ParseError);
}
