#include "naive_oracle.hpp"
#include "reference.hpp"

#include <coverkit/cover.hpp>
#include <coverkit/oracle.hpp>
#include <coverkit/random_graphs.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace coverkit;

namespace
{
    auto has_violation(const VerifyResult & r, ViolationKind kind) -> bool
    {
        return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation & v) { return v.kind == kind; });
    }

    auto c4_onto_w2() -> CoveringProjection
    {
        return CoveringProjection{{0, 1, 0, 1}, {0, 1, 0, 1}};
    }
}

TEST_CASE("an alternating map of C4 onto a double edge is a cover")
{
    auto g = reference::cycle(4);
    auto h = reference::w_graph(0, 0, 2, 0, 0);
    auto result = verify_cover(g, h, c4_onto_w2());
    CHECK(result.valid());
    CHECK(is_degree_obedient(g, h, c4_onto_w2().vertex_map));
}

TEST_CASE("two edges at one vertex onto one target edge break local bijectivity")
{
    auto g = reference::cycle(4);
    auto h = reference::w_graph(0, 0, 2, 0, 0);
    auto f = c4_onto_w2();
    f.edge_map[1] = 0;
    auto result = verify_cover(g, h, f);
    CHECK(! result.valid());
    CHECK(has_violation(result, ViolationKind::LocalBijection));
}

TEST_CASE("a cover must hit every component equally often")
{
    auto g = reference::cycle(3);
    Graph h("two triangles");
    for (int i = 0; i < 6; ++i)
        h.add_vertex("v" + std::to_string(i), "x");
    for (int i = 0; i < 3; ++i) {
        h.add_edge(EdgeKind::UndirectedNormal, "a", i, (i + 1) % 3);
        h.add_edge(EdgeKind::UndirectedNormal, "a", 3 + i, 3 + (i + 1) % 3);
    }
    CoveringProjection f{{0, 1, 2}, {0, 2, 4}};
    auto result = verify_cover(g, h, f);
    CHECK(has_violation(result, ViolationKind::FibreSize));
    CHECK(! has_violation(result, ViolationKind::LocalBijection));
}

TEST_CASE("colour and shape mistakes are reported")
{
    auto g = reference::cycle(4);
    auto h = reference::w_graph(0, 0, 2, 0, 0);
    CHECK(has_violation(verify_cover(g, h, CoveringProjection{{0, 1}, {0, 1, 0, 1}}), ViolationKind::Shape));
    auto f = c4_onto_w2();
    f.vertex_map[0] = unmapped;
    CHECK(has_violation(verify_cover(g, h, f), ViolationKind::Unmapped));
    auto red = reference::cycle(4, "red");
    CHECK(has_violation(verify_cover(red, h, c4_onto_w2()), ViolationKind::EdgeColour));
}

TEST_CASE("certificates survive JSON")
{
    auto g = reference::cycle(4);
    auto h = reference::w_graph(0, 0, 2, 0, 0);
    auto j = projection_to_json(g, h, c4_onto_w2());
    auto back = projection_from_json(g, h, j);
    CHECK(back.vertex_map == c4_onto_w2().vertex_map);
    CHECK(back.edge_map == c4_onto_w2().edge_map);
}

TEST_CASE("oracle examples")
{
    auto k4 = oracle_cover(reference::complete(4), reference::f_graph(1, 1));
    REQUIRE(k4.status == OracleStatus::Found);
    CHECK(verify_cover(reference::complete(4), reference::f_graph(1, 1), *k4.projection).valid());

    CHECK(oracle_cover(reference::cycle(3), reference::f_graph(2, 0)).status == OracleStatus::NotFound);

    auto c4 = oracle_cover(reference::cycle(4), reference::f_graph(2, 0));
    REQUIRE(c4.status == OracleStatus::Found);
    CHECK(verify_cover(reference::cycle(4), reference::f_graph(2, 0), *c4.projection).valid());
}

TEST_CASE("a budget that runs out gives Unknown")
{
    auto result = oracle_cover(reference::complete(6), reference::f_graph(1, 2), 1);
    CHECK(result.status == OracleStatus::Unknown);
}

TEST_CASE("degree obedience")
{
    // all of C3 onto the vertex of F(2,0) passes the counts; the cover still fails
    auto c3 = reference::cycle(3);
    CHECK(is_degree_obedient(c3, reference::f_graph(2, 0), {0, 0, 0}));
    CHECK(! naive::covers(c3, reference::f_graph(2, 0)));

    // K4 onto a triangle: degree 3 against degree 2
    CHECK(! is_degree_obedient(reference::complete(4), reference::cycle(3), {0, 1, 2, 0}));
}

TEST_CASE("the oracle agrees with brute force on small pairs")
{
    std::mt19937_64 rng(2024);
    int found = 0;
    for (int round = 0; round < 150; ++round) {
        RandomGraphOptions ho;
        ho.vertices = 1 + round % 3;
        ho.extra_edges = round % 3;
        ho.edge_colours = 1 + round % 2;
        auto h = random_connected_graph(ho, rng);
        if (h.edge_count() > 4)
            continue;
        auto lift = random_lift(h, 2, rng);
        auto g = lift.graph;
        // half of the inputs get perturbed so that some of them stop covering
        if (round % 2 == 1) {
            std::vector<std::size_t> blocks(g.vertex_count(), 0);
            random_switch(g, blocks, rng);
        }
        if (g.vertex_count() > 5 || g.edge_count() > 8)
            continue;
        auto library = oracle_cover(g, h);
        REQUIRE(library.status != OracleStatus::Unknown);
        auto brute = naive::covers(g, h);
        CHECK((library.status == OracleStatus::Found) == brute.has_value());
        if (library.projection)
            CHECK(verify_cover(g, h, *library.projection).valid());
        if (brute)
            CHECK(verify_cover(g, h, *brute).valid());
        found += brute.has_value();
    }
    CHECK(found > 0);
}

TEST_CASE("random lifts are covers")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        RandomGraphOptions options;
        options.vertices = 1 + round % 4;
        options.extra_edges = round % 4;
        auto h = random_connected_graph(options, rng);
        auto lift = random_lift(h, 1 + round % 4, rng);
        CHECK(verify_cover(lift.graph, h, lift.projection).valid());
        CHECK(is_degree_obedient(lift.graph, h, lift.projection.vertex_map));
    }
}

TEST_CASE("partial covers agree with brute force")
{
    auto lt = reference::cycle(3);
    auto h = reference::f_graph(2, 0);
    CHECK(partial_cover_exists(lt, h, {0, 0, 0}) == naive::extends_partially(lt, h, {0, 0, 0}));

    Graph path("p3");
    for (int i = 0; i < 3; ++i)
        path.add_vertex("v" + std::to_string(i), "x");
    path.add_edge(EdgeKind::UndirectedNormal, "a", 0, 1);
    path.add_edge(EdgeKind::UndirectedNormal, "a", 1, 2);
    CHECK(partial_cover_exists(path, h, {0, 0, 0}));
    CHECK(naive::extends_partially(path, h, {0, 0, 0}));
    CHECK(! partial_cover_exists(reference::complete(4), h, {0, 0, 0, 0}));
    CHECK(! naive::extends_partially(reference::complete(4), h, {0, 0, 0, 0}));
}
