#include "reference.hpp"

#include <coverkit/graph.hpp>
#include <coverkit/random_graphs.hpp>

#include <doctest.h>

#include <random>

using namespace coverkit;

namespace
{
    auto k13() -> Graph
    {
        Graph g("k13");
        auto c = g.add_vertex("c", "x");
        for (auto id : {"l1", "l2", "l3"})
            g.add_edge(EdgeKind::UndirectedNormal, "a", c, g.add_vertex(id, "x"));
        return g;
    }
}

TEST_CASE("parse the smallest graph")
{
    auto g = parse_graph("graph g\nvertex 1 black\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.name() == "g");
}

TEST_CASE("parse a vertex with a semi-edge and a loop")
{
    auto g = parse_graph("graph f11\n# one of each\nvertex p x\nsemi s1 a p\nloop l1 a p\n");
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edge(0).kind == EdgeKind::SemiEdge);
    CHECK(g.edge(1).kind == EdgeKind::UndirectedLoop);
    CHECK(degree(g, 0, {"a", Direction::Undirected}) == 3);
}

TEST_CASE("an arc from a vertex to itself is rejected")
{
    CHECK_THROWS_AS((void)parse_graph("graph g\nvertex 1 black\narc e1 red 1 1\n"), ParseError);
}

TEST_CASE("malformed input is reported with its line")
{
    try {
        (void)parse_graph("graph g\nvertex 1 black\nedge e1 red 1 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError & e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS((void)parse_graph("vertex 1 black\n"), ParseError);
    CHECK_THROWS_AS((void)parse_graph("graph g\nwidget 1\n"), ParseError);
}

TEST_CASE("a colour cannot serve two roles")
{
    Graph g;
    auto v = g.add_vertex("v", "x");
    CHECK_THROWS_AS(g.add_edge(EdgeKind::SemiEdge, "x", v, v), GraphError);
    g.add_edge(EdgeKind::SemiEdge, "a", v, v);
    CHECK_THROWS_AS(g.add_edge(EdgeKind::DirectedLoop, "a", v, v), GraphError);
}

TEST_CASE("serialization round-trips")
{
    auto one = parse_graph("graph g\nvertex 1 black\n");
    CHECK(serialize_graph(parse_graph(serialize_graph(one))) == serialize_graph(one));

    auto f20 = reference::f_graph(2, 0);
    auto back = parse_graph(serialize_graph(f20));
    CHECK(back.vertex_count() == 1);
    CHECK(back.edge_count() == 2);
    CHECK(back.edge(0).kind == EdgeKind::SemiEdge);

    auto mixed = reference::wd_graph(1, 2);
    auto text = serialize_graph(mixed);
    CHECK(serialize_graph(parse_graph(text)) == text);
}

TEST_CASE("degrees")
{
    Graph g;
    g.add_vertex("lonely", "x");
    CHECK(degree(g, 0, {"a", Direction::Undirected}) == 0);

    auto star = k13();
    CHECK(degree(star, 0, {"a", Direction::Undirected}) == 3);
    CHECK(degree(star, 1, {"a", Direction::Undirected}) == 1);

    auto wd = reference::wd_graph(2, 1);
    CHECK(degree(wd, 0, {"d", Direction::Out}) == 3);
    CHECK(degree(wd, 0, {"d", Direction::In}) == 3);
    CHECK(total_degree(wd, 0) == 6);
}

TEST_CASE("subgraphs")
{
    auto star = k13();
    auto leaves = induced_subgraph(star, {1, 2, 3});
    CHECK(leaves.vertex_count() == 3);
    CHECK(leaves.edge_count() == 0);

    auto c6 = reference::cycle(6);
    CHECK(colour_subgraph(c6, {"a"}).edge_count() == 6);

    Graph two("two");
    for (int i = 0; i < 4; ++i)
        two.add_vertex("v" + std::to_string(i), "x");
    two.add_edge(EdgeKind::UndirectedNormal, "a", 0, 1);
    two.add_edge(EdgeKind::UndirectedNormal, "a", 1, 2);
    two.add_edge(EdgeKind::UndirectedNormal, "b", 2, 3);
    auto only_a = colour_subgraph(two, {"a"});
    CHECK(only_a.vertex_count() == 4);
    CHECK(only_a.edge_count() == 2);
}

TEST_CASE("components")
{
    CHECK(components(reference::cycle(6)).size() == 1);
    CHECK(components(reference::cycle(6)).front().size() == 6);

    Graph u("c3+c4");
    for (int i = 0; i < 7; ++i)
        u.add_vertex("v" + std::to_string(i), "x");
    for (int i = 0; i < 3; ++i)
        u.add_edge(EdgeKind::UndirectedNormal, "a", i, (i + 1) % 3);
    for (int i = 0; i < 4; ++i)
        u.add_edge(EdgeKind::UndirectedNormal, "a", 3 + i, 3 + (i + 1) % 4);
    auto parts = components(u);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 3);
    CHECK(parts[1].size() == 4);
    CHECK(! is_connected(u));

    CHECK(components(reference::f_graph(2, 0)).size() == 1);
}

TEST_CASE("component shapes")
{
    CHECK(classify_component_shape(reference::cycle(5)) == ComponentShape::OddCycle);
    CHECK(classify_component_shape(reference::cycle(4)) == ComponentShape::EvenCycle);

    Graph path("p3");
    for (int i = 0; i < 3; ++i)
        path.add_vertex("v" + std::to_string(i), "x");
    path.add_edge(EdgeKind::UndirectedNormal, "a", 0, 1);
    path.add_edge(EdgeKind::UndirectedNormal, "a", 1, 2);
    path.add_edge(EdgeKind::SemiEdge, "a", 2, 2);
    CHECK(classify_component_shape(path) == ComponentShape::OpenPath);

    CHECK(classify_component_shape(reference::f_graph(0, 1)) == ComponentShape::OddCycle);
    CHECK(classify_component_shape(reference::complete(4)) == ComponentShape::Other);
}

TEST_CASE("structural predicates")
{
    CHECK(is_tree(k13()));
    CHECK(! is_tree(reference::cycle(4)));
    CHECK(is_path_or_cycle(reference::cycle(4)));
    CHECK(is_simple(reference::complete(4)));
    CHECK(! is_simple(reference::w_graph(0, 0, 2, 0, 0)));
    CHECK(! is_simple(reference::f_graph(1, 0)));
}

TEST_CASE("handshake: degrees sum to twice the non-semi edges plus the semi-edges")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        RandomGraphOptions options;
        options.vertices = 2 + round % 7;
        options.extra_edges = round % 5;
        auto g = random_connected_graph(options, rng);
        std::size_t sum = 0, expected = 0;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v)
            sum += total_degree(g, v);
        for (auto & e : g.edges())
            expected += e.kind == EdgeKind::SemiEdge ? 1 : 2;
        CHECK(sum == expected);
        CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
    }
}
