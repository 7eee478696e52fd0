#include <coverkit/gadgets.hpp>

#include <map>
#include <stdexcept>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

namespace
{
    const vector<string> tripod_sides{"u", "v", "m1", "m2", "m3"};

    // adds one copy of the limping tripod, naming its vertices name + suffix
    auto add_tripod(Graph & g, const string & suffix) -> std::map<string, VertexIndex>
    {
        std::map<string, VertexIndex> at;
        for (auto name : {"p1", "p2"})
            at[name] = g.add_vertex(name + suffix, gadget_hub_colour);
        for (auto & name : tripod_sides)
            at[name] = g.add_vertex(name + suffix, gadget_side_colour);
        for (auto p : {"p1", "p2"})
            for (auto m : {"m1", "m2", "m3"})
                g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, at[p], at[m]);
        g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, at["u"], at["p1"]);
        g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, at["v"], at["p2"]);
        return at;
    }

    auto hub_target(const string & name) -> Graph
    {
        Graph h(name);
        auto p = h.add_vertex("p", gadget_hub_colour);
        auto r = h.add_vertex("r", gadget_side_colour);
        auto g = h.add_vertex("g", gadget_side_colour);
        for (int i = 0; i < 2; ++i) {
            h.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, p, r);
            h.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, p, g);
        }
        return h;
    }

    auto require_simple(const Graph & g) -> Graph
    {
        if (! is_simple(g))
            throw std::logic_error("generator '" + g.name() + "' produced a graph that is not simple");
        return g;
    }
}

auto coverkit::limping_tripod() -> Graph
{
    Graph g("limping-tripod");
    add_tripod(g, "");
    return require_simple(g);
}

auto coverkit::fw_target(size_t c) -> Graph
{
    Graph h("FW(" + std::to_string(c) + ")");
    auto p = h.add_vertex("p", gadget_hub_colour);
    auto r = h.add_vertex("r", gadget_side_colour);
    auto g = h.add_vertex("g", gadget_side_colour);
    for (size_t i = 0; i < c; ++i) {
        h.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, p, r);
        h.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, p, g);
    }
    return h;
}

auto coverkit::wd_target(size_t b, size_t c) -> Graph
{
    Graph h("WD(" + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(b) + ")");
    auto r = h.add_vertex("r", gadget_side_colour);
    auto g = h.add_vertex("g", gadget_side_colour);
    for (size_t i = 0; i < b; ++i) {
        h.add_edge(EdgeKind::DirectedLoop, gadget_alpha, r, r);
        h.add_edge(EdgeKind::DirectedLoop, gadget_alpha, g, g);
    }
    for (size_t i = 0; i < c; ++i) {
        h.add_edge(EdgeKind::DirectedNormal, gadget_alpha, r, g);
        h.add_edge(EdgeKind::DirectedNormal, gadget_alpha, g, r);
    }
    return h;
}

auto coverkit::build_gphi_fw(size_t c, const Formula & f) -> Graph
{
    f.validate();
    if (c < 3 || f.c != c)
        throw std::invalid_argument("the FW(c) construction needs c >= 3 and a c-in-2c formula");
    if (! f.has_occurrences(c))
        throw std::invalid_argument("every variable must occur in exactly c clauses");

    Graph g("G_phi-FW(" + std::to_string(c) + ")");
    auto text = [](size_t i) { return std::to_string(i + 1); };
    vector<VertexIndex> z;
    for (size_t s = 0; s < f.clauses.size(); ++s)
        z.push_back(g.add_vertex("z" + text(s), gadget_hub_colour));

    // v_i^{x,j} is shared by the u_i^{x,s} of all clauses s containing x
    std::map<std::pair<size_t, size_t>, vector<VertexIndex>> v;
    for (size_t x = 0; x < f.variables.size(); ++x)
        for (size_t i = 0; i + 1 < c; ++i)
            for (size_t j = 0; j + 1 < 2 * c; ++j)
                v[{x, i}].push_back(g.add_vertex("v" + text(i) + "[" + f.variables[x] + "," + text(j) + "]", gadget_side_colour));

    for (size_t s = 0; s < f.clauses.size(); ++s)
        for (auto x : f.clauses[s]) {
            auto tag = "[" + f.variables[x] + "," + text(s) + "]";
            auto w = g.add_vertex("w" + tag, gadget_side_colour);
            g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, z[s], w);
            for (size_t i = 0; i + 1 < c; ++i) {
                auto u = g.add_vertex("u" + text(i) + tag, gadget_hub_colour);
                g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, w, u);
                for (auto target : v[{x, i}])
                    g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, u, target);
            }
        }
    return require_simple(g);
}

auto coverkit::bipartition(const Graph & g) -> optional<vector<bool>>
{
    vector<int> side(g.vertex_count(), -1);
    for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
        if (side[start] != -1)
            continue;
        side[start] = 0;
        vector<VertexIndex> stack{start};
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto e : g.incident(v)) {
                auto & edge = g.edge(e);
                if (edge.tail == edge.head)
                    return std::nullopt;
                auto w = edge.other(v);
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                }
                else if (side[w] == side[v])
                    return std::nullopt;
            }
        }
    }
    return vector<bool>(side.begin(), side.end());
}

auto coverkit::directed_lift_wd(const Graph & g, size_t b, size_t c) -> Graph
{
    if (! is_simple(g))
        throw std::invalid_argument("the directed lift needs a simple graph");
    for (auto & e : g.edges())
        if (e.kind != EdgeKind::UndirectedNormal)
            throw std::invalid_argument("the directed lift needs an undirected graph");
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (total_degree(g, v) != b + c)
            throw std::invalid_argument("vertex '" + g.vertex(v).id + "' does not have degree " + std::to_string(b + c));
    auto side = bipartition(g);
    if (! side)
        throw std::invalid_argument("the directed lift needs a bipartite graph");

    Graph lift("lift-WD(" + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(b) + ")");
    vector<VertexIndex> plain, barred;
    for (auto & v : g.vertices())
        plain.push_back(lift.add_vertex(v.id, gadget_side_colour));
    for (auto & v : g.vertices())
        barred.push_back(lift.add_vertex(v.id + "'", gadget_side_colour));
    for (auto & e : g.edges()) {
        auto u = (*side)[e.tail] ? e.head : e.tail;
        auto v = e.other(u);
        lift.add_edge(EdgeKind::DirectedNormal, gadget_alpha, plain[u], plain[v]);
        lift.add_edge(EdgeKind::DirectedNormal, gadget_alpha, plain[v], barred[u]);
        lift.add_edge(EdgeKind::DirectedNormal, gadget_alpha, barred[u], barred[v]);
        lift.add_edge(EdgeKind::DirectedNormal, gadget_alpha, barred[v], plain[u]);
    }
    return require_simple(lift);
}

auto coverkit::to_string(GadgetCase c) -> string
{
    switch (c) {
    case GadgetCase::C0: return "C0";
    case GadgetCase::Ck: return "Ck";
    case GadgetCase::Dk: return "Dk";
    case GadgetCase::B1: return "B1";
    }
    throw std::invalid_argument("unknown gadget case");
}

auto coverkit::gadget_target(GadgetCase c, size_t k) -> Graph
{
    auto name = c == GadgetCase::Ck || c == GadgetCase::Dk ? to_string(c).substr(0, 1) + std::to_string(k) : to_string(c);
    auto h = hub_target(name);
    auto r = h.vertex_index("r"), g = h.vertex_index("g");
    for (auto x : {r, g}) {
        if (c == GadgetCase::C0 || c == GadgetCase::Ck)
            h.add_edge(EdgeKind::SemiEdge, gadget_beta, x, x);
        if (c == GadgetCase::Ck || c == GadgetCase::Dk)
            for (size_t i = 0; i < k; ++i)
                h.add_edge(EdgeKind::UndirectedLoop, gadget_beta, x, x);
    }
    if (c == GadgetCase::B1)
        h.add_edge(EdgeKind::UndirectedNormal, gadget_beta, r, g);
    return h;
}

auto VariableGadget::two_sided() const -> bool
{
    return ! second_ports.empty();
}

auto coverkit::variable_gadget(GadgetCase c, size_t k) -> VariableGadget
{
    if ((c == GadgetCase::Ck || c == GadgetCase::Dk) && k < 1)
        throw std::invalid_argument("the " + to_string(c) + " gadget needs k >= 1");
    size_t copies = 2;
    if (c == GadgetCase::Ck || c == GadgetCase::Dk)
        copies = 2 * k + 2;
    else if (c == GadgetCase::B1)
        copies = 4;

    VariableGadget result{c, k, Graph("gadget-" + to_string(c) + (k ? std::to_string(k) : "")), gadget_target(c, k), {}, {}};
    auto & g = result.graph;
    vector<std::map<string, VertexIndex>> tripod;
    for (size_t t = 0; t < copies; ++t)
        tripod.push_back(add_tripod(g, "." + std::to_string(t + 1)));
    auto beta = [&](const string & x, size_t s, size_t t) { g.add_edge(EdgeKind::UndirectedNormal, gadget_beta, tripod[s][x], tripod[t][x]); };

    switch (c) {
    case GadgetCase::C0:
        for (auto & x : tripod_sides)
            beta(x, 0, 1);
        break;
    case GadgetCase::Ck:
        for (auto & x : tripod_sides)
            for (size_t s = 0; s < copies; ++s)
                for (size_t t = s + 1; t < copies; ++t)
                    beta(x, s, t);
        break;
    case GadgetCase::Dk:
        // K_{2k+2} minus the perfect matching {1,2}, {3,4}, ... is 2k-regular and connected
        for (auto & x : tripod_sides)
            for (size_t s = 0; s < copies; ++s)
                for (size_t t = s + 1; t < copies; ++t)
                    if (! (s % 2 == 0 && t == s + 1))
                        beta(x, s, t);
        break;
    case GadgetCase::B1:
        for (auto x : {"m1", "m2", "m3", "v"}) {
            beta(x, 0, 1);
            beta(x, 2, 3);
        }
        g.add_edge(EdgeKind::UndirectedNormal, gadget_beta, tripod[0]["u"], tripod[3]["u"]);
        g.add_edge(EdgeKind::UndirectedNormal, gadget_beta, tripod[1]["u"], tripod[2]["u"]);
        result.ports = {tripod[0]["u"], tripod[2]["u"], tripod[0]["v"], tripod[2]["v"]};
        result.second_ports = {tripod[1]["u"], tripod[3]["u"], tripod[1]["v"], tripod[3]["v"]};
        require_simple(g);
        return result;
    }
    for (size_t t = 0; t < copies; ++t) {
        result.ports.push_back(tripod[t]["u"]);
        result.ports.push_back(tripod[t]["v"]);
    }
    require_simple(g);
    return result;
}

auto coverkit::compose_claim_a(const VariableGadget & gadget, const Formula & f) -> Graph
{
    f.validate();
    auto k = gadget.ports.size();
    if (f.c != 2)
        throw std::invalid_argument("the composition needs a 2-in-4 formula");
    if (! f.has_occurrences(k))
        throw std::invalid_argument("every variable must occur in exactly " + std::to_string(k) + " clauses");
    if (gadget.two_sided() && gadget.second_ports.size() != k)
        throw std::invalid_argument("a two-sided gadget needs as many second ports as ports");

    Graph g("claim-a-" + gadget.graph.name());
    auto sides = gadget.two_sided() ? 2 : 1;
    vector<vector<VertexIndex>> z(sides);
    for (int side = 0; side < sides; ++side)
        for (size_t s = 0; s < f.clauses.size(); ++s)
            z[side].push_back(g.add_vertex((sides == 2 ? "z" + std::to_string(side + 1) + "." : "z") + std::to_string(s + 1), gadget_hub_colour));

    for (size_t x = 0; x < f.variables.size(); ++x) {
        auto prefix = f.variables[x] + ":";
        vector<VertexIndex> copy;
        for (auto & v : gadget.graph.vertices())
            copy.push_back(g.add_vertex(prefix + v.id, v.colour));
        for (auto & e : gadget.graph.edges())
            g.add_edge(prefix + e.id, e.kind, e.colour, copy[e.tail], copy[e.head]);
        auto clauses = f.clauses_of(x);
        for (size_t i = 0; i < k; ++i) {
            g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, copy[gadget.ports[i]], z[0][clauses[i]]);
            if (gadget.two_sided())
                g.add_edge(EdgeKind::UndirectedNormal, gadget_alpha, copy[gadget.second_ports[i]], z[1][clauses[i]]);
        }
    }
    return require_simple(g);
}
