#include "oracles.hpp"

#include "tfree/circular_interval.hpp"
#include "tfree/edge_list.hpp"
#include "tfree/errors.hpp"
#include "tfree/exact_solver.hpp"
#include "tfree/generators.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace tfree;

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::vector<Rational> weights(std::initializer_list<int> xs)
{
    std::vector<Rational> out;
    for (int x : xs) {
        out.emplace_back(x);
    }
    return out;
}

CircularOrder identity(std::size_t n)
{
    CircularOrder order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    return order;
}

}  // namespace

TEST_CASE("index sets for t = 1")
{
    const IndexSets s = index_sets(1);
    CHECK(s.s == 4);
    CHECK(s.forward_pairs == std::vector<Pair>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(s.far_pairs == std::vector<Pair>{{0, 2}, {1, 3}});
    CHECK(s.cut_pairs[0] == std::vector<Pair>{{0, 1}});
    CHECK(clockwise_span(0, 2, 4) == std::vector<std::size_t>{0, 1});
    CHECK(clockwise_span(3, 1, 4) == std::vector<std::size_t>{3, 0});
    CHECK_THROWS_AS(index_sets(0), ShapeError);
}

TEST_CASE("property: index set double counting")
{
    for (std::size_t t = 1; t <= 6; ++t) {
        const IndexSets s = index_sets(t);
        std::size_t cut_total = 0;
        for (const auto& c : s.cut_pairs) {
            cut_total += c.size();
        }
        std::size_t span_total = 0;
        for (const auto& [i, j] : s.forward_pairs) {
            span_total += clockwise_span(i, j, s.s).size();
        }
        CHECK(cut_total == span_total);
        CHECK(s.forward_pairs.size() == s.s * t);
        CHECK(s.far_pairs.size() == s.s * (s.s - 1) / 2 - s.s * t);
    }
}

TEST_CASE("generator")
{
    const GeneratedGraph c4 = generate(BlockStructure::from_sizes({1, 1, 1, 1}));
    CHECK(c4.graph == parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0\n"));
    CHECK(c4.order == identity(4));

    const GeneratedGraph g2 = generate(BlockStructure::from_sizes({2, 2, 2, 2}));
    CHECK(g2.graph.vertex_count() == 8);
    CHECK(gamma_count(g2.graph) == 8);
    CHECK(beta_exact(g2.graph).beta == 4);

    CHECK(generate(BlockStructure::from_sizes({0, 0, 0, 0})).graph.vertex_count() == 0);
    CHECK_THROWS_AS(BlockStructure::from_sizes({1, 1, 1}), ShapeError);
    CHECK_THROWS_AS(BlockStructure::from_sizes({1}), ShapeError);

    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(extremal_family(n) == oracle::extremal_by_rules(n));
    }
}

TEST_CASE("property: generated graphs are 3-free circular interval digraphs")
{
    std::mt19937_64 rng(41);
    for (int round = 0; round < 200; ++round) {
        const std::size_t t = 1 + rng() % 3;
        std::vector<std::size_t> sizes(3 * t + 1);
        for (auto& x : sizes) {
            x = rng() % 4;
        }
        const GeneratedGraph g = generate(BlockStructure::from_sizes(sizes));
        CHECK(is_k_free(g.graph, 3));
        CHECK(verify_circular_interval(g.graph, g.order));
        CHECK(oracle::is_circular_interval(g.graph, g.order));
    }
}

TEST_CASE("circular interval verification")
{
    const Digraph c4 = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(verify_circular_interval(c4, identity(4)));
    const Digraph skip = parse_edge_list("n 4\n0 2\n");
    CHECK_FALSE(verify_circular_interval(skip, identity(4)));
    const Vertex not_perm[] = {0, 1, 1, 3};
    CHECK_THROWS_AS(verify_circular_interval(c4, not_perm), PreconditionError);

    std::mt19937_64 rng(42);
    for (int round = 0; round < 300; ++round) {
        const Digraph g = oracle::random_digraph(1 + round % 6, 0.3, rng);
        CircularOrder order = identity(g.vertex_count());
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(verify_circular_interval(g, order) == oracle::is_circular_interval(g, order));
    }
}

TEST_CASE("best cut")
{
    const CutIndex ones = best_cut(weights({1, 1, 1, 1}));
    CHECK(ones.cut_value == 1);
    CHECK(ones.half_far_sum == 1);
    CHECK(ones.k == 0);

    const CutIndex r = best_cut(weights({1, 2, 3, 4}));
    CHECK(r.cut_values == weights({2, 6, 12, 4}));
    CHECK(r.k == 0);
    CHECK(r.cut_value == 2);
    CHECK(r.half_far_sum == Rational(11, 2));
    CHECK(r.within_bound());

    CHECK(best_cut(weights({0, 0, 0, 0})).cut_value == 0);
    CHECK_THROWS_AS(best_cut(weights({1, 2, 3})), ShapeError);
    CHECK_THROWS_AS(best_cut(weights({1, -2, 3, 4})), PreconditionError);
}

TEST_CASE("property: cut values match direct recomputation")
{
    std::mt19937_64 rng(43);
    for (int round = 0; round < 400; ++round) {
        const std::size_t t = 1 + round % 4;
        std::vector<Rational> w(3 * t + 1);
        for (auto& x : w) {
            x = oracle::random_rational(rng, 100, 5);
        }
        const CutIndex c = best_cut(w);
        for (std::size_t k = 0; k < w.size(); ++k) {
            CHECK(c.cut_values[k] == oracle::cut_value(w, k));
            CHECK(c.cut_value <= c.cut_values[k]);
        }
        CHECK(c.cut_values[c.k] == c.cut_value);
        CHECK(c.half_far_sum == oracle::half_far_sum(w));
        CHECK(c.within_bound());
    }
}

TEST_CASE("cut arcs")
{
    const BlockStructure c4 = BlockStructure::from_sizes({1, 1, 1, 1});
    CHECK(cut_arcs(generate(c4).graph, c4, 0) == ArcList{{0, 1}});

    const BlockStructure g2 = BlockStructure::from_sizes({2, 2, 2, 2});
    const Digraph graph = generate(g2).graph;
    const ArcList x = cut_arcs(graph, g2, best_cut(weights({2, 2, 2, 2})).k);
    CHECK(x.size() == 4);
    CHECK(verify_feedback_set(graph, x));
    CHECK(x.size() == beta_exact(graph).beta);

    const BlockStructure zero = BlockStructure::from_sizes({0, 0, 0, 0});
    CHECK(cut_arcs(generate(zero).graph, zero, 0).empty());
    CHECK_THROWS_AS(cut_arcs(graph, c4, 0), StructureError);

    std::mt19937_64 rng(44);
    for (int round = 0; round < 100; ++round) {
        const std::size_t t = 1 + rng() % 2;
        std::vector<std::size_t> sizes(3 * t + 1);
        std::vector<Rational> w;
        for (auto& s : sizes) {
            s = rng() % 4;
            w.emplace_back(s);
        }
        const BlockStructure b = BlockStructure::from_sizes(sizes);
        const Digraph g = generate(b).graph;
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            const ArcList cut = cut_arcs(g, b, k);
            CHECK(verify_feedback_set(g, cut));
            CHECK(Rational(cut.size()) == oracle::cut_value(w, k));
        }
    }
}

TEST_CASE("maximal completion")
{
    const Digraph c4 = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(maximal_completion(c4, identity(4)) == c4);

    const Digraph path = parse_edge_list("n 4\n0 1\n1 2\n2 3\n");
    const Digraph done = maximal_completion(path, identity(4));
    CHECK(is_k_free(done, 3));
    CHECK(verify_circular_interval(done, identity(4)));
    // 3 -> 0 (distance 1) is tried first and closes the 4-cycle, after
    // which 0 -> 2 and 1 -> 3 would each close a directed triangle
    CHECK(done == c4);

    const Digraph triangle = parse_edge_list("n 3\n0 1\n1 2\n2 0\n");
    CHECK_THROWS_AS(maximal_completion(triangle, identity(3)), PreconditionError);
    CHECK_THROWS_AS(maximal_completion(parse_edge_list("n 4\n0 2\n"), identity(4)), PreconditionError);
}

TEST_CASE("property: completion is maximal for its order")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const CircularInstance inst = random_circular_interval(2, 3, seed);
        const Digraph done = maximal_completion(inst.graph, inst.order);
        CHECK(is_k_free(done, 3));
        CHECK(verify_circular_interval(done, inst.order));
        for (const Arc& a : inst.graph.arcs()) {
            CHECK(done.has_arc(a.from, a.to));
        }
        const std::size_t n = done.vertex_count();
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (u == v || done.adjacent(u, v)) {
                    continue;
                }
                DigraphBuilder b(done);
                b.add_arc(u, v);
                const Digraph bigger = b.build();
                CHECK_FALSE((is_k_free(bigger, 3) && verify_circular_interval(bigger, inst.order)));
            }
        }
    }
}

TEST_CASE("structure recognition")
{
    const GeneratedGraph g = generate(BlockStructure::from_sizes({1, 2, 3, 1, 2, 1, 1}));
    const RecognizedStructure r = recognize_structure(g.graph, g.order);
    REQUIRE(r.blocks);
    CHECK(r.blocks->sizes == std::vector<std::size_t>{1, 2, 3, 1, 2, 1, 1});
    CHECK(r.block_of == g.block_of);

    const Digraph tt = parse_edge_list("n 3\n0 1\n0 2\n1 2\n");
    CHECK(recognize_structure(tt, identity(3)).transitive_tournament);

    // rotating the order rotates the block vector
    CircularOrder rotated = g.order;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    const RecognizedStructure rr = recognize_structure(g.graph, rotated);
    REQUIRE(rr.blocks);
    CHECK(rr.blocks->sizes == std::vector<std::size_t>{2, 3, 1, 2, 1, 1, 1});

    const Digraph path = parse_edge_list("n 4\n0 1\n1 2\n2 3\n");
    CHECK_THROWS_AS(recognize_structure(path, identity(4)), StructureError);
}

TEST_CASE("circular feedback certificates")
{
    const GeneratedGraph g = generate(BlockStructure::from_sizes({2, 2, 2, 2}));
    const CircularFeedback r = circular_feedback(g.graph, g.order);
    CHECK(r.certificate.size() == 4);
    CHECK(r.certificate.within_bound());
    CHECK(r.certificate.algorithm == "circular-interval");
    REQUIRE(r.cut);
    CHECK(r.cut->cut_value == 4);

    const Digraph tt = parse_edge_list("n 3\n0 1\n0 2\n1 2\n");
    CHECK(circular_feedback(tt, identity(3)).certificate.arcs.empty());
    CHECK_THROWS_AS(circular_feedback(parse_edge_list("n 3\n0 1\n1 2\n2 0\n"), identity(3)), PreconditionError);

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const CircularInstance inst = random_circular_interval(3, 3, seed);
        REQUIRE(oracle::is_circular_interval(inst.graph, inst.order));
        const CircularFeedback f = circular_feedback(inst.graph, inst.order);
        CHECK(f.certificate.within_bound());
        CHECK(verify_feedback_set(inst.graph, f.certificate.arcs));
        if (inst.graph.vertex_count() <= 14) {
            CHECK(beta_exact(inst.graph).beta <= f.certificate.size());
        }
    }
}
