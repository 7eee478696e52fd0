#include "reference.hpp"

#include <coverkit/lifts.hpp>
#include <coverkit/oracle.hpp>
#include <coverkit/partition.hpp>
#include <coverkit/random_graphs.hpp>

#include <doctest.h>

#include <random>

using namespace coverkit;

namespace
{
    auto found(const Graph & g, const Graph & h) -> bool
    {
        auto result = oracle_cover(g, h);
        REQUIRE(result.status != OracleStatus::Unknown);
        return result.status == OracleStatus::Found;
    }

    /// a and b in separate blocks joined by k parallel m-edges; a carries a semi-edge s, b a loop y.
    auto matched_pair(std::size_t k) -> Graph
    {
        Graph h("pair");
        auto a = h.add_vertex("a", "A");
        auto b = h.add_vertex("b", "B");
        h.add_edge(EdgeKind::SemiEdge, "s", a, a);
        h.add_edge(EdgeKind::UndirectedLoop, "y", b, b);
        for (std::size_t i = 0; i < k; ++i)
            h.add_edge(EdgeKind::UndirectedNormal, "m", a, b);
        return h;
    }

    /// Inputs for h: random lifts, some perturbed while keeping the refinement matrix.
    auto inputs(const Graph & h, std::mt19937_64 & rng, std::size_t count, std::size_t max_fold) -> std::vector<Graph>
    {
        auto matrix = degree_partition(h).matrix;
        std::vector<Graph> result;
        for (std::size_t i = 0; i < count; ++i) {
            auto g = random_lift(h, 1 + i % max_fold, rng).graph;
            if (i % 2 == 1) {
                auto blocks = degree_partition(g).partition.block_of;
                for (int step = 0; step < 3; ++step) {
                    auto candidate = g;
                    if (random_switch(candidate, blocks, rng) && degree_partition(candidate).matrix == matrix)
                        g = candidate;
                }
            }
            result.push_back(g);
        }
        return result;
    }
}

TEST_CASE("contracting a matching")
{
    auto c = contract_matching(matched_pair(2), "m");
    CHECK(c.k == 2);
    CHECK(c.h.vertex_count() == 1);
    CHECK(c.h.vertex(0).id == "a/b");
    CHECK(c.h.edge_count() == 2);
    CHECK(c.a_edge_colours == std::set<std::string>{"s"});
    CHECK(c.b_edge_colours == std::set<std::string>{"y"});
    CHECK_THROWS_AS((void)contract_matching(matched_pair(2), "s"), std::invalid_argument);
    CHECK_THROWS_AS((void)contract_matching(matched_pair(2), "nothing"), std::invalid_argument);
}

TEST_CASE("de-priming preserves cover existence")
{
    std::mt19937_64 rng(8);
    for (std::size_t k : {1, 2}) {
        auto c = contract_matching(matched_pair(k), "m");
        int yes = 0, no = 0;
        for (auto & g : inputs(c.h, rng, 10, 3)) {
            auto lifted = deprime_lift(g, c);
            CHECK(lifted.vertex_count() == 2 * k * g.vertex_count());
            auto before = found(g, c.h), after = found(lifted, c.h_prime);
            CHECK(before == after);
            (before ? yes : no) += 1;
        }
        CHECK(yes > 0);
    }
}

TEST_CASE("de-priming a two-block toy host")
{
    // blocks {a1, a2} and {b1, b2}, matched by m; a-side joined by x, b-side by a double y
    Graph h("toy");
    auto a1 = h.add_vertex("a1", "A"), a2 = h.add_vertex("a2", "A");
    auto b1 = h.add_vertex("b1", "B"), b2 = h.add_vertex("b2", "B");
    h.add_edge(EdgeKind::UndirectedNormal, "x", a1, a2);
    h.add_edge(EdgeKind::UndirectedNormal, "y", b1, b2);
    h.add_edge(EdgeKind::UndirectedNormal, "y", b1, b2);
    h.add_edge(EdgeKind::UndirectedNormal, "m", a1, b1);
    h.add_edge(EdgeKind::UndirectedNormal, "m", a2, b2);
    auto c = contract_matching(h, "m");
    CHECK(c.k == 1);
    CHECK(c.h.vertex_count() == 2);
    std::mt19937_64 rng(1);
    for (auto & g : inputs(c.h, rng, 8, 3)) {
        if (g.vertex_count() > 6)
            continue;
        CHECK(found(g, c.h) == found(deprime_lift(g, c), h));
    }
}

TEST_CASE("spanning lifts pad the absent blocks")
{
    Graph h("host");
    auto p = h.add_vertex("p", "x");
    auto r = h.add_vertex("r", "y"), g = h.add_vertex("g", "y");
    auto q = h.add_vertex("q", "z");
    h.add_edge(EdgeKind::UndirectedNormal, "a", p, r);
    h.add_edge(EdgeKind::UndirectedNormal, "a", p, g);
    h.add_edge(EdgeKind::UndirectedNormal, "b", r, g);
    h.add_edge(EdgeKind::SemiEdge, "c", q, q);
    h.add_edge(EdgeKind::UndirectedNormal, "d", p, q);

    Graph hp("part");
    auto pr = hp.add_vertex("r", "y"), pg = hp.add_vertex("g", "y");
    auto pq = hp.add_vertex("q", "z");
    hp.add_edge(EdgeKind::UndirectedNormal, "b", pr, pg);
    hp.add_edge(EdgeKind::SemiEdge, "c", pq, pq);

    Graph good("good");
    for (int i = 0; i < 4; ++i)
        good.add_vertex("y" + std::to_string(i), "y");
    good.add_edge(EdgeKind::UndirectedNormal, "b", 0, 1);
    good.add_edge(EdgeKind::UndirectedNormal, "b", 2, 3);
    for (int i = 0; i < 2; ++i) {
        auto z = good.add_vertex("z" + std::to_string(i), "z");
        good.add_edge(EdgeKind::SemiEdge, "c", z, z);
    }
    auto padded = spanning_lift(good, hp, h);
    REQUIRE(padded.has_value());
    CHECK(padded->vertex_count() == 8);
    CHECK(padded->edge_count() == good.edge_count());
    auto spanning = spanning_subgraph(hp, h);
    CHECK(spanning.vertex_count() == 4);
    CHECK(found(good, hp) == found(*padded, spanning));

    // two z vertices but only one y-pair: ratios 1 and 2
    Graph bad("bad");
    bad.add_vertex("y0", "y");
    bad.add_vertex("y1", "y");
    bad.add_edge(EdgeKind::UndirectedNormal, "b", 0, 1);
    for (int i = 0; i < 2; ++i) {
        auto z = bad.add_vertex("z" + std::to_string(i), "z");
        bad.add_edge(EdgeKind::SemiEdge, "c", z, z);
    }
    CHECK(! spanning_lift(bad, hp, h).has_value());

    // nothing absent: nothing added
    auto same = spanning_lift(good, hp, hp);
    REQUIRE(same.has_value());
    CHECK(same->vertex_count() == good.vertex_count());
}

TEST_CASE("balance")
{
    CHECK(is_balanced(reference::w_graph(1, 0, 1, 0, 1)));
    CHECK(is_balanced(reference::w_graph(0, 0, 2, 0, 0)));
    CHECK(! is_balanced(reference::w_graph(2, 0, 0, 1, 0)));
}

TEST_CASE("garbage lifts")
{
    // host: a double r-g edge plus a semi-edge of another colour at each end
    auto h = reference::w_graph(0, 0, 2, 0, 0);
    h.add_edge(EdgeKind::SemiEdge, "s", 0, 0);
    h.add_edge(EdgeKind::SemiEdge, "s", 1, 1);
    auto hp = colour_subgraph(h, {"a"});
    REQUIRE(is_balanced(hp));

    Graph triangles("triangles");
    for (int i = 0; i < 6; ++i)
        triangles.add_vertex("v" + std::to_string(i), "x");
    for (int i = 0; i < 3; ++i) {
        triangles.add_edge(EdgeKind::UndirectedNormal, "a", i, (i + 1) % 3);
        triangles.add_edge(EdgeKind::UndirectedNormal, "a", 3 + i, 3 + (i + 1) % 3);
    }
    for (auto & g : {reference::cycle(6), reference::cycle(4), triangles}) {
        auto lifted = garbage_lift(g, hp, h, 4);
        REQUIRE(lifted.has_value());
        CHECK(lifted->vertex_count() == 8 * g.vertex_count());
        CHECK(is_simple(*lifted));
        CHECK(found(g, hp) == found(*lifted, h));
    }

    CHECK_THROWS_AS((void)garbage_lift(reference::cycle(6), hp, h, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)garbage_lift(reference::cycle(6), hp, h, 2), std::invalid_argument);
    CHECK(! garbage_lift(reference::complete(4), hp, h, 4).has_value());
}
