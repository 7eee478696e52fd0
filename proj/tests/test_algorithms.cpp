#include "reference.hpp"

#include <coverkit/factorization.hpp>
#include <coverkit/formula.hpp>
#include <coverkit/matching.hpp>
#include <coverkit/random_graphs.hpp>
#include <coverkit/two_sat.hpp>

#include <doctest.h>

#include <random>
#include <set>

using namespace coverkit;

namespace
{
    auto brute_force_2sat(const TwoSatInstance & instance) -> bool
    {
        auto value = [](std::uint64_t mask, Literal l) { return (((mask >> l.variable) & 1) != 0) == l.positive; };
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << instance.variable_count); ++mask) {
            bool ok = true;
            for (auto & [a, b] : instance.clauses)
                ok = ok && (value(mask, a) || value(mask, b));
            for (auto & u : instance.units)
                ok = ok && value(mask, u);
            if (ok)
                return true;
        }
        return false;
    }

    auto petersen() -> Graph
    {
        Graph g("petersen");
        for (int i = 0; i < 10; ++i)
            g.add_vertex("v" + std::to_string(i), "x");
        for (int i = 0; i < 5; ++i) {
            g.add_edge(EdgeKind::UndirectedNormal, "a", i, (i + 1) % 5);
            g.add_edge(EdgeKind::UndirectedNormal, "a", i, i + 5);
            g.add_edge(EdgeKind::UndirectedNormal, "a", 5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }

    auto k33() -> Graph
    {
        Graph g("k33");
        for (int i = 0; i < 6; ++i)
            g.add_vertex("v" + std::to_string(i), "x");
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j)
                g.add_edge(EdgeKind::UndirectedNormal, "a", i, j);
        return g;
    }

    // every factor is a perfect matching and the factors partition the edges
    auto check_matchings(const Graph & g, const std::vector<std::vector<EdgeIndex>> & factors) -> void
    {
        std::multiset<EdgeIndex> used;
        for (auto & factor : factors) {
            std::vector<int> hits(g.vertex_count(), 0);
            for (auto e : factor) {
                ++hits[g.edge(e).tail];
                ++hits[g.edge(e).head];
                used.insert(e);
            }
            for (auto h : hits)
                CHECK(h == 1);
        }
        CHECK(used.size() == g.edge_count());
        CHECK(std::set<EdgeIndex>(used.begin(), used.end()).size() == g.edge_count());
    }

    auto check_two_factors(const Graph & g, const std::vector<std::vector<EdgeIndex>> & factors) -> void
    {
        std::set<EdgeIndex> used;
        for (auto & factor : factors) {
            std::vector<int> degree(g.vertex_count(), 0);
            for (auto e : factor) {
                degree[g.edge(e).tail] += 1;
                degree[g.edge(e).head] += 1;
                CHECK(used.insert(e).second);
            }
            for (auto d : degree)
                CHECK(d == 2);
        }
        CHECK(used.size() == g.edge_count());
    }

    auto check_directed_factors(const Graph & g, const std::vector<std::vector<EdgeIndex>> & factors) -> void
    {
        std::set<EdgeIndex> used;
        for (auto & factor : factors) {
            std::vector<int> out(g.vertex_count(), 0), in(g.vertex_count(), 0);
            for (auto e : factor) {
                ++out[g.edge(e).tail];
                ++in[g.edge(e).head];
                CHECK(used.insert(e).second);
            }
            for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
                CHECK(out[v] == 1);
                CHECK(in[v] == 1);
            }
        }
        CHECK(used.size() == g.edge_count());
    }
}

TEST_CASE("2-SAT examples")
{
    TwoSatInstance one;
    auto x = one.add_variable(), y = one.add_variable();
    one.add_antivalence(x, y);
    auto solution = solve_2sat(one);
    REQUIRE(solution.has_value());
    CHECK((*solution)[x] != (*solution)[y]);
    CHECK(satisfies(one, *solution));

    TwoSatInstance two;
    x = two.add_variable();
    y = two.add_variable();
    two.add_equivalence(x, y);
    two.add_antivalence(x, y);
    CHECK(! solve_2sat(two).has_value());

    TwoSatInstance units;
    x = units.add_variable();
    units.add_unit(Literal{x, true});
    units.add_unit(Literal{x, false});
    CHECK(! solve_2sat(units).has_value());
}

TEST_CASE("2-SAT agrees with brute force on 12 variables")
{
    std::mt19937_64 rng(99);
    int satisfiable = 0;
    for (int round = 0; round < 200; ++round) {
        TwoSatInstance instance;
        for (int i = 0; i < 12; ++i)
            instance.add_variable();
        std::uniform_int_distribution<std::size_t> var(0, 11);
        std::bernoulli_distribution sign(0.5);
        auto clauses = 8 + round % 20;
        for (int i = 0; i < clauses; ++i)
            instance.add_clause(Literal{var(rng), sign(rng)}, Literal{var(rng), sign(rng)});
        if (round % 5 == 0)
            instance.add_unit(Literal{var(rng), sign(rng)});
        auto solution = solve_2sat(instance);
        CHECK(solution.has_value() == brute_force_2sat(instance));
        if (solution) {
            CHECK(satisfies(instance, *solution));
            ++satisfiable;
        }
    }
    CHECK(satisfiable > 0);
    CHECK(satisfiable < 200);
}

TEST_CASE("perfect matchings")
{
    auto c4 = general_perfect_matching(reference::cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->size() == 2);
    CHECK(! general_perfect_matching(reference::cycle(3)).has_value());

    auto p = petersen();
    auto m = general_perfect_matching(p);
    REQUIRE(m.has_value());
    CHECK(m->size() == 5);
    std::set<VertexIndex> covered;
    for (auto e : *m) {
        covered.insert(p.edge(e).tail);
        covered.insert(p.edge(e).head);
    }
    CHECK(covered.size() == 10);

    // two triangles joined by one edge need the blossom
    auto matching = maximum_matching(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(matching.size() == 3);
}

TEST_CASE("maximum matching agrees with brute force")
{
    std::mt19937_64 rng(3);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 2 + round % 7;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<IndexPair> edges;
        for (int i = 0; i < 2 + round % 9; ++i)
            edges.emplace_back(pick(rng), pick(rng));
        std::size_t best = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
            std::set<std::size_t> used;
            std::size_t size = 0;
            bool ok = true;
            for (std::size_t e = 0; e < edges.size() && ok; ++e)
                if ((mask >> e) & 1) {
                    auto [u, v] = edges[e];
                    ok = u != v && used.insert(u).second && used.insert(v).second;
                    ++size;
                }
            if (ok)
                best = std::max(best, size);
        }
        CHECK(maximum_matching(n, edges).size() == best);
    }
}

TEST_CASE("bipartite factorization examples")
{
    Graph k22("k22");
    for (int i = 0; i < 4; ++i)
        k22.add_vertex("v" + std::to_string(i), "x");
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j)
            k22.add_edge(EdgeKind::UndirectedNormal, "a", i, j);
    auto two = bipartite_k_factorization(k22, 2);
    CHECK(two.size() == 2);
    check_matchings(k22, two);

    auto c6 = reference::cycle(6);
    auto alternating = bipartite_k_factorization(c6, 2);
    CHECK(alternating.size() == 2);
    check_matchings(c6, alternating);

    auto g = k33();
    auto three = bipartite_k_factorization(g, 3);
    CHECK(three.size() == 3);
    check_matchings(g, three);

    CHECK_THROWS((void)bipartite_k_factorization(reference::cycle(5), 2));
}

TEST_CASE("two-factorization examples")
{
    auto c6 = reference::cycle(6);
    auto one = two_factorization(c6, 1);
    CHECK(one.size() == 1);
    check_two_factors(c6, one);

    auto k5 = reference::complete(5);
    auto two = two_factorization(k5, 2);
    CHECK(two.size() == 2);
    check_two_factors(k5, two);

    auto loops = reference::f_graph(0, 2);
    auto singles = two_factorization(loops, 2);
    CHECK(singles.size() == 2);
    check_two_factors(loops, singles);

    CHECK_THROWS((void)two_factorization(reference::complete(4), 2));
}

TEST_CASE("directed cycle cover examples")
{
    Graph c3("dc3");
    for (int i = 0; i < 3; ++i)
        c3.add_vertex("v" + std::to_string(i), "x");
    for (int i = 0; i < 3; ++i)
        c3.add_edge(EdgeKind::DirectedNormal, "d", i, (i + 1) % 3);
    auto one = directed_cycle_cover_decomposition(c3, 1);
    CHECK(one.size() == 1);
    check_directed_factors(c3, one);

    Graph k3("dk3");
    for (int i = 0; i < 3; ++i)
        k3.add_vertex("v" + std::to_string(i), "x");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                k3.add_edge(EdgeKind::DirectedNormal, "d", i, j);
    auto two = directed_cycle_cover_decomposition(k3, 2);
    CHECK(two.size() == 2);
    check_directed_factors(k3, two);

    auto loops = reference::fd_graph(3);
    auto three = directed_cycle_cover_decomposition(loops, 3);
    CHECK(three.size() == 3);
    check_directed_factors(loops, three);
}

TEST_CASE("factorizations of random regular graphs")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto k = 1 + seed % 4;
        auto bip = random_regular(RegularKind::Bipartite, k, 4 + seed % 5, seed);
        check_matchings(bip.graph, bip.colouring);
        check_matchings(bip.graph, bipartite_k_factorization(bip.graph, k));
        CHECK(is_simple(bip.graph));

        auto even = random_regular(RegularKind::Even, 2 * (1 + seed % 2), 6 + 2 * (seed % 3), seed);
        check_matchings(even.graph, even.colouring);
        check_two_factors(even.graph, two_factorization(even.graph, 1 + seed % 2));

        auto dir = random_regular(RegularKind::Directed, 1 + seed % 2, 6 + 2 * (seed % 2), seed);
        check_directed_factors(dir.graph, dir.colouring);
        check_directed_factors(dir.graph, directed_cycle_cover_decomposition(dir.graph, 1 + seed % 2));
    }
}

TEST_CASE("random regular special cases")
{
    auto k33 = random_regular(RegularKind::Bipartite, 3, 3, 1);
    CHECK(k33.graph.vertex_count() == 6);
    CHECK(k33.graph.edge_count() == 9);
    CHECK(is_simple(k33.graph));
    CHECK(reference::bc_colourable(k33.graph, 0, 3));

    auto k4 = random_regular(RegularKind::Even, 3, 4, 1);
    CHECK(k4.graph.vertex_count() == 4);
    CHECK(k4.graph.edge_count() == 6);
    CHECK(is_simple(k4.graph));

    CHECK_THROWS_AS((void)random_regular(RegularKind::Even, 2, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)random_regular(RegularKind::Bipartite, 4, 3, 1), std::invalid_argument);
}

TEST_CASE("formula brute force")
{
    Formula one;
    one.c = 2;
    one.variables = {"a", "b", "c", "d"};
    one.clauses = {{0, 1, 2, 3}};
    auto witness = brute_force_formula(one);
    REQUIRE(witness.has_value());
    CHECK(one.satisfied_by(*witness));

    // every 4-subset of five variables: each clause omits one variable, so all
    // five values agree and 4x = 2 has no solution
    Formula odd;
    odd.c = 2;
    odd.variables = {"a", "b", "c", "d", "e"};
    odd.clauses = {{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}};
    CHECK(! brute_force_formula(odd).has_value());
    CHECK(! reference::formula_satisfiable(odd));

    Formula triple;
    triple.c = 3;
    for (int i = 0; i < 6; ++i)
        triple.variables.push_back("x" + std::to_string(i));
    triple.clauses = {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}};
    CHECK(brute_force_formula(triple).has_value());

    Formula bad;
    bad.c = 2;
    bad.variables = {"a", "b", "c"};
    bad.clauses = {{0, 1, 2, 2}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("random formulas keep the occurrence discipline and match brute force")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto f = random_formula(2, 4 + seed % 3, 4, seed);
        f.validate();
        CHECK(f.has_occurrences(4));
        CHECK(brute_force_formula(f).has_value() == reference::formula_satisfiable(f));

        auto g = random_formula(3, 3, 3, seed);
        CHECK(g.has_occurrences(3));
        CHECK(brute_force_formula(g).has_value() == reference::formula_satisfiable(g));
    }
}

TEST_CASE("formulas read from JSON")
{
    auto f = formula_from_json(nlohmann::json::parse(R"({"c": 2, "clauses": [["x1","x2","x3","x4"], ["x1","x2","x5","x6"]]})"));
    CHECK(f.variables.size() == 6);
    CHECK(f.clauses_of(0) == std::vector<std::size_t>{0, 1});
    CHECK(formula_from_json(f.to_json()).clauses == f.clauses);
}
