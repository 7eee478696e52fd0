#include "naive_oracle.hpp"
#include "reference.hpp"

#include <coverkit/gadgets.hpp>
#include <coverkit/oracle.hpp>
#include <coverkit/partition.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace coverkit;

namespace
{
    auto alpha(const Graph & g, VertexIndex v) -> std::size_t
    {
        return degree(g, v, {gadget_alpha, Direction::Undirected});
    }

    auto beta(const Graph & g, VertexIndex v) -> std::size_t
    {
        return g.colour_use(gadget_beta) ? degree(g, v, {gadget_beta, Direction::Undirected}) : 0;
    }

    /// Partial covers onto the gadget target with the given vertices pinned.
    auto pinned(const VariableGadget & gadget, const std::vector<std::pair<VertexIndex, std::string>> & pins) -> OracleStatus
    {
        OracleOptions options;
        options.partial = true;
        options.allowed.assign(gadget.graph.vertex_count(), {});
        for (auto & [v, target] : pins)
            options.allowed[v] = {gadget.target.vertex_index(target)};
        return oracle_search(gadget.graph, gadget.target, options).status;
    }

    auto pin_all(const std::vector<VertexIndex> & vs, const std::string & target) -> std::vector<std::pair<VertexIndex, std::string>>
    {
        std::vector<std::pair<VertexIndex, std::string>> pins;
        for (auto v : vs)
            pins.emplace_back(v, target);
        return pins;
    }
}

TEST_CASE("limping tripod")
{
    auto lt = limping_tripod();
    CHECK(lt.vertex_count() == 7);
    CHECK(lt.edge_count() == 8);
    CHECK(is_simple(lt));
    for (auto id : {"p1", "p2"})
        CHECK(total_degree(lt, lt.vertex_index(id)) == 4);
    for (auto id : {"m1", "m2", "m3"})
        CHECK(total_degree(lt, lt.vertex_index(id)) == 2);
    for (auto id : {"u", "v"})
        CHECK(total_degree(lt, lt.vertex_index(id)) == 1);
    CHECK(lt.vertex(lt.vertex_index("p1")).colour != lt.vertex(lt.vertex_index("u")).colour);
}

TEST_CASE("limping tripod ports agree in every partial cover")
{
    auto lt = limping_tripod();
    auto h = fw_target(2);
    auto u = lt.vertex_index("u"), v = lt.vertex_index("v");
    int partial = 0;
    for (auto & fv : naive::all_vertex_maps(lt, h)) {
        if (! naive::extends_partially(lt, h, fv))
            continue;
        ++partial;
        CHECK(fv[u] == fv[v]);
        CHECK(partial_cover_exists(lt, h, fv));
    }
    CHECK(partial > 0);
}

TEST_CASE("G_Phi for FW(3)")
{
    auto f = random_formula(3, 3, 3, 4);
    auto g = build_gphi_fw(3, f);
    CHECK(g.vertex_count() == 117);
    CHECK(g.edge_count() == 234);
    CHECK(is_simple(g));
    CHECK(bipartition(g).has_value());
    std::size_t six = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        auto d = total_degree(g, v);
        CHECK((d == 3 || d == 6));
        six += d == 6;
        auto & id = g.vertex(v).id;
        if (id.front() == 'z' || id.front() == 'u')
            CHECK(d == 6);
    }
    // |C| clause vertices and |C| * 2c * (c - 1) connector centres
    CHECK(six == 3 + 3 * 6 * 2);

    Formula wrong = f;
    wrong.c = 2;
    CHECK_THROWS_AS((void)build_gphi_fw(2, wrong), std::invalid_argument);
    auto four = random_formula(3, 4, 2, 1);
    CHECK_THROWS_AS((void)build_gphi_fw(3, four), std::invalid_argument);
}

TEST_CASE("directed lift of C4")
{
    auto lift = directed_lift_wd(reference::cycle(4), 1, 1);
    CHECK(lift.vertex_count() == 8);
    CHECK(lift.edge_count() == 16);
    CHECK(is_simple(lift));
    for (VertexIndex v = 0; v < lift.vertex_count(); ++v) {
        CHECK(degree(lift, v, {gadget_alpha, Direction::Out}) == 2);
        CHECK(degree(lift, v, {gadget_alpha, Direction::In}) == 2);
    }
    CHECK_THROWS_AS((void)directed_lift_wd(reference::cycle(5), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)directed_lift_wd(reference::cycle(4), 2, 1), std::invalid_argument);
}

TEST_CASE("bipartition")
{
    CHECK(bipartition(reference::cycle(6)).has_value());
    CHECK(! bipartition(reference::cycle(5)).has_value());
    CHECK(! bipartition(reference::f_graph(1, 0)).has_value());
}

TEST_CASE("gadgets keep the port discipline")
{
    std::vector<VariableGadget> gadgets{variable_gadget(GadgetCase::C0), variable_gadget(GadgetCase::Ck, 1), variable_gadget(GadgetCase::Ck, 2),
        variable_gadget(GadgetCase::Dk, 1), variable_gadget(GadgetCase::Dk, 2), variable_gadget(GadgetCase::B1)};
    for (auto & gadget : gadgets) {
        INFO(gadget.graph.name());
        auto & g = gadget.graph;
        auto & h = gadget.target;
        CHECK(is_simple(g));
        CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
        auto r = h.vertex_index("r");
        std::set<VertexIndex> ports(gadget.ports.begin(), gadget.ports.end());
        ports.insert(gadget.second_ports.begin(), gadget.second_ports.end());
        CHECK(ports.size() == gadget.ports.size() + gadget.second_ports.size());
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            if (g.vertex(v).colour == gadget_hub_colour) {
                CHECK(alpha(g, v) == 4);
                continue;
            }
            CHECK(alpha(g, v) == (ports.count(v) ? 1 : 2));
            CHECK(beta(g, v) == beta(h, r));
        }
    }
    CHECK(variable_gadget(GadgetCase::C0).ports.size() == 4);
    CHECK(variable_gadget(GadgetCase::B1).two_sided());
    CHECK(! variable_gadget(GadgetCase::C0).two_sided());
    CHECK_THROWS_AS((void)variable_gadget(GadgetCase::Ck, 0), std::invalid_argument);
}

TEST_CASE("C0 gadget ports share one image")
{
    auto gadget = variable_gadget(GadgetCase::C0);
    auto & g = gadget.graph;
    auto & h = gadget.target;
    int partial = 0;
    std::set<VertexIndex> images;
    for (auto & fv : naive::all_vertex_maps(g, h)) {
        if (! naive::extends_partially(g, h, fv))
            continue;
        ++partial;
        std::set<VertexIndex> port_images;
        for (auto p : gadget.ports)
            port_images.insert(fv[p]);
        CHECK(port_images.size() == 1);
        images.insert(port_images.begin(), port_images.end());
    }
    CHECK(partial > 0);
    // both truth values are available
    CHECK(images.size() == 2);
}

TEST_CASE("gadget ports are forced together")
{
    for (auto gadget : {variable_gadget(GadgetCase::Ck, 1), variable_gadget(GadgetCase::Dk, 1), variable_gadget(GadgetCase::Dk, 2)}) {
        INFO(gadget.graph.name());
        CHECK(pinned(gadget, pin_all(gadget.ports, "r")) == OracleStatus::Found);
        CHECK(pinned(gadget, pin_all(gadget.ports, "g")) == OracleStatus::Found);
        for (std::size_t i = 1; i < gadget.ports.size(); ++i)
            CHECK(pinned(gadget, {{gadget.ports[0], "r"}, {gadget.ports[i], "g"}}) == OracleStatus::NotFound);
    }
}

TEST_CASE("B1 gadget ports split four and four")
{
    auto gadget = variable_gadget(GadgetCase::B1);
    REQUIRE(gadget.ports.size() == 4);
    REQUIRE(gadget.second_ports.size() == 4);
    auto all = pin_all(gadget.ports, "r");
    auto second = pin_all(gadget.second_ports, "g");
    all.insert(all.end(), second.begin(), second.end());
    CHECK(pinned(gadget, all) == OracleStatus::Found);
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(pinned(gadget, {{gadget.ports[0], "r"}, {gadget.ports[i], "g"}}) == OracleStatus::NotFound);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(pinned(gadget, {{gadget.ports[0], "r"}, {gadget.second_ports[i], "r"}}) == OracleStatus::NotFound);
}

TEST_CASE("2-in-4 composition")
{
    auto gadget = variable_gadget(GadgetCase::C0);
    auto f = random_formula(2, 4, 4, 3);
    REQUIRE(f.variables.size() == 4);
    auto g = compose_claim_a(gadget, f);
    CHECK(g.vertex_count() == 4 * gadget.graph.vertex_count() + 4);
    CHECK(is_simple(g));
    for (std::size_t s = 0; s < 4; ++s)
        CHECK(alpha(g, g.vertex_index("z" + std::to_string(s + 1))) == 4);
    // every vertex now has the degree of its image
    auto & h = gadget.target;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        auto image = g.vertex(v).colour == gadget_hub_colour ? h.vertex_index("p") : h.vertex_index("r");
        CHECK(total_degree(g, v) == total_degree(h, image));
    }

    auto two = compose_claim_a(variable_gadget(GadgetCase::B1), f);
    CHECK(two.vertex_count() == 4 * variable_gadget(GadgetCase::B1).graph.vertex_count() + 8);
    CHECK(is_simple(two));

    auto three = random_formula(3, 3, 3, 1);
    CHECK_THROWS_AS((void)compose_claim_a(gadget, three), std::invalid_argument);
}

TEST_CASE("2-in-4 compositions cover the target exactly when the formula is satisfiable")
{
    int yes = 0, no = 0;
    std::vector<Formula> formulas;
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        formulas.push_back(random_formula(2, 4, 4, seed));
    Formula odd;
    odd.c = 2;
    odd.variables = {"a", "b", "c", "d", "e"};
    odd.clauses = {{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}};
    formulas.push_back(odd);
    for (auto & f : formulas) {
        REQUIRE(f.has_occurrences(4));
        auto satisfiable = reference::formula_satisfiable(f);
        auto gadget = variable_gadget(GadgetCase::C0);
        auto g = compose_claim_a(gadget, f);
        auto result = oracle_cover(g, gadget.target);
        REQUIRE(result.status != OracleStatus::Unknown);
        CHECK((result.status == OracleStatus::Found) == satisfiable);
        if (result.projection)
            CHECK(verify_cover(g, gadget.target, *result.projection).valid());
        (satisfiable ? yes : no) += 1;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}

TEST_CASE("generator outputs are stable under double round-trip")
{
    for (auto & g : {limping_tripod(), build_gphi_fw(3, random_formula(3, 3, 3, 2)), directed_lift_wd(reference::cycle(6), 1, 1)}) {
        auto once = serialize_graph(parse_graph(serialize_graph(g)));
        CHECK(serialize_graph(parse_graph(once)) == once);
    }
}
