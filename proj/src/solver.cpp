#include <coverkit/edge_assignment.hpp>
#include <coverkit/matching.hpp>
#include <coverkit/solver.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

namespace
{
    struct Component
    {
        vector<VertexIndex> vertices;
        size_t links = 0, semis = 0;
    };

    class DisjointSets
    {
    private:
        vector<size_t> parent;

    public:
        explicit DisjointSets(size_t n) :
            parent(n)
        {
            std::iota(parent.begin(), parent.end(), 0);
        }

        auto find(size_t x) -> size_t
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }

        auto unite(size_t a, size_t b) -> void { parent[find(a)] = find(b); }
    };

    auto edges_of_colour(const Graph & g, const string & colour) -> vector<EdgeIndex>
    {
        vector<EdgeIndex> result;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e)
            if (g.edge(e).colour == colour)
                result.push_back(e);
        return result;
    }

    // components of the given vertices joined by the colour's normal edges
    auto colour_components(const Graph & g, const vector<VertexIndex> & vertices, const string & colour) -> vector<Component>
    {
        DisjointSets sets(g.vertex_count());
        auto edges = edges_of_colour(g, colour);
        for (auto e : edges)
            sets.unite(g.edge(e).tail, g.edge(e).head);

        std::map<size_t, Component> by_root;
        for (auto v : vertices)
            by_root[sets.find(v)].vertices.push_back(v);
        for (auto e : edges) {
            auto & c = by_root[sets.find(g.edge(e).tail)];
            if (g.edge(e).kind == EdgeKind::SemiEdge)
                ++c.semis;
            else
                ++c.links;
        }
        vector<Component> result;
        for (auto & [_, c] : by_root)
            result.push_back(std::move(c));
        return result;
    }

    auto is_open_path(const Component & c) -> bool { return c.links + 1 == c.vertices.size(); }

    auto is_odd_cycle(const Component & c) -> bool { return c.semis == 0 && c.links == c.vertices.size() && c.links % 2 == 1; }

    auto semi_counts(const Graph & g, const string & colour) -> std::map<VertexIndex, size_t>
    {
        std::map<VertexIndex, size_t> result;
        for (auto e : edges_of_colour(g, colour))
            if (g.edge(e).kind == EdgeKind::SemiEdge)
                ++result[g.edge(e).tail];
        return result;
    }

    enum class Side
    {
        Any,
        Out,
        In
    };

    // a loop makes the vertex its own neighbour twice, so antivalence forces a contradiction
    auto neighbours(const Graph & g, VertexIndex u, const string & colour, Side side) -> vector<VertexIndex>
    {
        vector<VertexIndex> result;
        for (auto e : g.incident(u)) {
            auto & edge = g.edge(e);
            if (edge.colour != colour)
                continue;
            switch (edge.kind) {
            case EdgeKind::UndirectedNormal: result.push_back(edge.other(u)); break;
            case EdgeKind::UndirectedLoop:
                result.push_back(u);
                result.push_back(u);
                break;
            case EdgeKind::SemiEdge: break;
            case EdgeKind::DirectedNormal:
                if (side == Side::Any || (side == Side::Out) == (edge.tail == u))
                    result.push_back(edge.other(u));
                break;
            case EdgeKind::DirectedLoop: result.push_back(u); break;
            }
        }
        return result;
    }

    auto subcase_of(const BlockGraphShape & s, bool first_doublet, bool second_doublet) -> string
    {
        auto & p = s.shape.parameters;
        switch (s.shape.family) {
        case ShapeFamily::F:
            if (p[0] == 2)
                return "3A";
            return p[0] == 1 ? "3B" : "3C";
        case ShapeFamily::FD: return "3C";
        case ShapeFamily::W:
            if (p == vector<size_t>{2, 0, 0, 0, 2})
                return "4A";
            if (p == vector<size_t>{2, 0, 0, 1, 0})
                return "4B";
            if (p == vector<size_t>{1, 0, 1, 0, 1})
                return "4D";
            if (p[0] == 1 && p[2] == 0)
                return "4C";
            if (p[0] == 0 && p[2] == 0)
                return "5A";
            if (p[0] == 0 && p[1] == 0)
                return "5B";
            break;
        case ShapeFamily::WD:
            if (p[1] == 0)
                return "5A";
            if (p[0] == 0)
                return "5B";
            if (p == vector<size_t>{1, 1, 1})
                return "5D";
            break;
        case ShapeFamily::FF: return "FF";
        case ShapeFamily::FW:
            if (p[0] == 1)
                return "5E";
            break;
        case ShapeFamily::WW:
            if (! first_doublet || ! second_doublet)
                break;
            if (p == vector<size_t>{1, 1})
                return "5F";
            if (p[0] == 0)
                return "5G";
            break;
        }
        throw SolverInternalError("block graph " + s.shape.to_string() + " has no polynomial subcase");
    }

    auto id_list(const Graph & g, const vector<EdgeIndex> & edges) -> nlohmann::json
    {
        auto result = nlohmann::json::array();
        for (auto e : edges)
            result.push_back(g.edge(e).id);
        return result;
    }

    auto fail(SolveTrace & trace, string message) -> bool
    {
        trace.failure = std::move(message);
        return false;
    }

    // a perfect matching on the vertices without a semi-edge, from the colour's normal edges among them
    auto semi_matching(const Graph & g, const vector<VertexIndex> & vertices, const string & colour, const std::map<VertexIndex, size_t> & semis)
        -> optional<vector<EdgeIndex>>
    {
        vector<size_t> local(g.vertex_count(), unmapped);
        size_t n = 0;
        for (auto v : vertices)
            if (! semis.contains(v))
                local[v] = n++;
        vector<IndexPair> pairs;
        vector<EdgeIndex> origin;
        for (auto e : edges_of_colour(g, colour)) {
            auto & edge = g.edge(e);
            if (edge.kind != EdgeKind::UndirectedNormal || local[edge.tail] == unmapped || local[edge.head] == unmapped)
                continue;
            pairs.emplace_back(local[edge.tail], local[edge.head]);
            origin.push_back(e);
        }
        auto m = perfect_matching(n, pairs);
        if (! m)
            return std::nullopt;
        vector<EdgeIndex> result;
        for (auto i : *m)
            result.push_back(origin[i]);
        return result;
    }

    auto check_no_semis(const Graph & g, const string & colour, SolveTrace & trace) -> bool
    {
        auto semis = semi_counts(g, colour);
        if (! semis.empty())
            return fail(trace, "vertex '" + g.vertex(semis.begin()->first).id + "' has a semi-edge of colour '" + colour
                    + "' but the target block graph has none");
        return true;
    }

    auto check_at_most_one_semi(const Graph & g, const string & colour, SolveTrace & trace) -> bool
    {
        for (auto & [v, count] : semi_counts(g, colour))
            if (count >= 2)
                return fail(trace, "vertex '" + g.vertex(v).id + "' has " + std::to_string(count) + " semi-edges of colour '" + colour + "'");
        return true;
    }

    auto check_matching(const Graph & g, const vector<VertexIndex> & vertices, const string & colour, SolveTrace & trace) -> bool
    {
        auto m = semi_matching(g, vertices, colour, semi_counts(g, colour));
        if (! m)
            return fail(trace, "no perfect matching on the vertices without a semi-edge of colour '" + colour + "'");
        trace.matchings[colour] = *m;
        return true;
    }

    auto check_paths_and_even_cycles(const Graph & g, const vector<VertexIndex> & vertices, const string & colour, SolveTrace & trace) -> bool
    {
        for (auto & c : colour_components(g, vertices, colour))
            if (! is_open_path(c) && ! (c.semis == 0 && c.links == c.vertices.size() && c.links % 2 == 0))
                return fail(trace, "a component of colour '" + colour + "' through '" + g.vertex(c.vertices.front()).id
                        + "' is neither an even cycle nor an open path");
        return true;
    }

    auto count_kind_at(const Graph & h, VertexIndex x, const string & colour, EdgeKind kind) -> size_t
    {
        size_t result = 0;
        for (auto e : h.incident(x))
            if (h.edge(e).colour == colour && h.edge(e).kind == kind)
                ++result;
        return result;
    }

    auto adjacent(const Graph & h, VertexIndex x, VertexIndex y, const string & colour) -> bool
    {
        for (auto e : h.incident(x))
            if (h.edge(e).colour == colour && h.edge(e).tail != h.edge(e).head && h.edge(e).other(x) == y)
                return true;
        return false;
    }

    // labels the darts at each vertex alternately with the two semi-edges
    auto alternate(const Graph & g, const EdgeClass & c, vector<EdgeIndex> & edge_map) -> bool
    {
        std::map<VertexIndex, vector<size_t>> darts;
        for (size_t i = 0; i < c.g_edges.size(); ++i) {
            auto & edge = g.edge(c.g_edges[i]);
            if (edge.kind == EdgeKind::UndirectedLoop)
                return false;
            darts[edge.tail].push_back(i);
            if (edge.kind == EdgeKind::UndirectedNormal)
                darts[edge.head].push_back(i);
        }
        vector<vector<size_t>> conflict(c.g_edges.size());
        for (auto & [_, list] : darts) {
            if (list.size() != 2)
                return false;
            conflict[list[0]].push_back(list[1]);
            conflict[list[1]].push_back(list[0]);
        }
        vector<int> label(c.g_edges.size(), -1);
        for (size_t start = 0; start < c.g_edges.size(); ++start) {
            if (label[start] != -1)
                continue;
            label[start] = 0;
            vector<size_t> stack{start};
            while (! stack.empty()) {
                auto i = stack.back();
                stack.pop_back();
                for (auto j : conflict[i]) {
                    if (label[j] == -1) {
                        label[j] = 1 - label[i];
                        stack.push_back(j);
                    }
                    else if (label[j] == label[i])
                        return false;
                }
            }
        }
        for (size_t i = 0; i < c.g_edges.size(); ++i)
            edge_map[c.g_edges[i]] = c.h_semis[label[i]];
        return true;
    }

    // the class's edges onto one semi-edge and l loops
    auto assign_one_semi(const Graph & g, const vector<VertexIndex> & fibre, const EdgeClass & c, const std::set<EdgeIndex> & recorded,
        vector<EdgeIndex> & edge_map, string & how) -> bool
    {
        std::map<VertexIndex, size_t> semis;
        vector<EdgeIndex> normal;
        for (auto e : c.g_edges) {
            if (g.edge(e).kind == EdgeKind::SemiEdge)
                ++semis[g.edge(e).tail];
            else if (g.edge(e).kind == EdgeKind::UndirectedNormal)
                normal.push_back(e);
        }
        for (auto & [_, count] : semis)
            if (count != 1)
                return false;

        vector<EdgeIndex> matching;
        for (auto e : normal)
            if (recorded.contains(e))
                matching.push_back(e);
        std::map<VertexIndex, size_t> covered;
        for (auto e : matching) {
            ++covered[g.edge(e).tail];
            ++covered[g.edge(e).head];
        }
        bool reuse = ! matching.empty() || fibre.size() == semis.size();
        for (auto v : fibre)
            if (covered[v] != (semis.contains(v) ? 0 : 1))
                reuse = false;
        if (reuse)
            how = "recorded matching onto the semi-edge";
        else {
            auto fresh = semi_matching(g, fibre, c.colour, semis);
            if (! fresh)
                return false;
            matching = *fresh;
            how = "fresh matching onto the semi-edge";
        }

        std::set<EdgeIndex> to_semi(matching.begin(), matching.end());
        vector<EdgeIndex> rest;
        for (auto e : c.g_edges) {
            if (g.edge(e).kind == EdgeKind::SemiEdge || to_semi.contains(e))
                edge_map[e] = c.h_semis[0];
            else
                rest.push_back(e);
        }
        if (! c.h_loops.empty())
            how += ", " + std::to_string(c.h_loops.size()) + " 2-factors onto the loops";
        return assign_fibre_loops(g, fibre, rest, c.h_loops, edge_map);
    }
}

auto SolveTrace::to_json(const Graph & g) const -> nlohmann::json
{
    auto cases = nlohmann::json::array();
    for (auto & s : subcases) {
        auto blocks = nlohmann::json::array({s.block + 1});
        if (s.other_block)
            blocks.push_back(*s.other_block + 1);
        cases.push_back({{"blocks", blocks}, {"colour", s.colour}, {"subcase", s.subcase}, {"shape", s.shape}});
    }
    auto found = nlohmann::json::object();
    for (auto & [colour, edges] : matchings)
        found[colour] = id_list(g, edges);
    auto unit_json = nlohmann::json::object();
    for (auto & [v, value] : units)
        unit_json[g.vertex(v).id] = value;
    auto values = nlohmann::json::object();
    for (auto & [v, value] : assignment)
        values[g.vertex(v).id] = value;
    nlohmann::json result{{"matrices_equal", matrices_equal}, {"subcases", cases}, {"matchings", found}, {"units", unit_json},
        {"assignment", values}, {"completion", completion_log}};
    if (! failure.empty())
        result["failure"] = failure;
    return result;
}

auto SolverContext::doublet(size_t block) const -> bool { return hp.partition.blocks.at(block).size() == 2; }

auto coverkit::to_string(SolveStatus status) -> string
{
    switch (status) {
    case SolveStatus::Covers: return "covers";
    case SolveStatus::DoesNotCover: return "does not cover";
    case SolveStatus::Refused: return "refused";
    }
    throw GraphError("unknown solve status");
}

auto coverkit::solver_refusal(const Graph & h) -> string
{
    if (h.vertex_count() == 0)
        return "the target is empty";
    if (! is_connected(h))
        return "the target is disconnected";
    auto dp = degree_partition(h);
    for (auto & block : dp.partition.blocks)
        if (block.size() > 2)
            return "a block of the target has " + std::to_string(block.size()) + " vertices";
    for (auto & s : block_graph_shapes(h, dp.partition))
        if (s.shape_class != ShapeClass::Harmless)
            return "block graph " + s.shape.to_string() + " of colour '" + s.colour + "' is " + to_string(s.shape_class);
    return "";
}

auto coverkit::prepare_context(const Graph & g, const Graph & h, SolveTrace & trace) -> optional<SolverContext>
{
    auto gp = degree_partition(g);
    auto hp = degree_partition(h);
    trace.matrices_equal = gp.matrix == hp.matrix;
    if (! trace.matrices_equal)
        return std::nullopt;

    SolverContext ctx{normalize_colours(g, gp.partition), normalize_colours(h, hp.partition), gp, hp, {}, {}, {}};
    ctx.shapes = block_graph_shapes(h, hp.partition);
    ctx.variable_of.assign(g.vertex_count(), unmapped);
    for (size_t i = 0; i < gp.partition.size(); ++i)
        if (ctx.doublet(i))
            for (auto u : gp.partition.blocks[i]) {
                ctx.variable_of[u] = ctx.vertex_of_variable.size();
                ctx.vertex_of_variable.push_back(u);
            }

    for (auto & s : ctx.shapes) {
        bool first = ctx.doublet(s.block), second = s.other_block ? ctx.doublet(*s.other_block) : first;
        trace.subcases.push_back(SubcaseRecord{s.block, s.other_block, s.colour, subcase_of(s, first, second), s.shape.to_string()});
    }
    return ctx;
}

auto coverkit::check_singletons(const SolverContext & ctx, SolveTrace & trace) -> bool
{
    for (auto & record : trace.subcases) {
        if (record.other_block || ctx.doublet(record.block))
            continue;
        auto & vertices = ctx.gp.partition.blocks[record.block];
        if (record.subcase == "3A") {
            if (! check_paths_and_even_cycles(ctx.g, vertices, record.colour, trace))
                return false;
        }
        else if (record.subcase == "3B") {
            if (! check_at_most_one_semi(ctx.g, record.colour, trace) || ! check_matching(ctx.g, vertices, record.colour, trace))
                return false;
        }
        else if (! check_no_semis(ctx.g, record.colour, trace))
            return false;
    }
    return true;
}

auto coverkit::preprocess_doublets(const SolverContext & ctx, TwoSatInstance & instance, SolveTrace & trace) -> bool
{
    while (instance.variable_count < ctx.vertex_of_variable.size())
        instance.add_variable();

    for (auto & record : trace.subcases) {
        if (record.other_block || ! ctx.doublet(record.block))
            continue;
        auto & vertices = ctx.gp.partition.blocks[record.block];
        auto & colour = record.colour;
        auto & s = record.subcase;
        if (s == "4A") {
            for (auto & c : colour_components(ctx.g, vertices, colour))
                if (is_odd_cycle(c))
                    return fail(trace, "a component of colour '" + colour + "' through '" + ctx.g.vertex(c.vertices.front()).id
                            + "' is an odd cycle");
            if (! check_paths_and_even_cycles(ctx.g, vertices, colour, trace))
                return false;
        }
        else if (s == "4B") {
            auto b = ctx.hp.partition.blocks[record.block][0];
            bool semis_at_b = count_kind_at(ctx.h, b, colour, EdgeKind::SemiEdge) == 2;
            for (auto & c : colour_components(ctx.g, vertices, colour)) {
                optional<bool> value;
                if (is_open_path(c))
                    value = semis_at_b;
                else if (is_odd_cycle(c))
                    value = ! semis_at_b;
                else if (c.semis != 0 || c.links != c.vertices.size())
                    return fail(trace, "a component of colour '" + colour + "' through '" + ctx.g.vertex(c.vertices.front()).id
                            + "' is neither a cycle nor an open path");
                if (! value)
                    continue;
                for (auto u : c.vertices) {
                    instance.add_unit(Literal{ctx.variable_of[u], *value});
                    trace.units.emplace_back(u, *value);
                }
            }
        }
        else if (s == "4C") {
            if (! check_at_most_one_semi(ctx.g, colour, trace) || ! check_matching(ctx.g, vertices, colour, trace))
                return false;
        }
        else if (s == "4D") {
            if (! check_at_most_one_semi(ctx.g, colour, trace))
                return false;
        }
        else if (! check_no_semis(ctx.g, colour, trace))
            return false;
    }
    return true;
}

auto coverkit::build_2sat(const SolverContext & ctx, TwoSatInstance & instance) -> void
{
    while (instance.variable_count < ctx.vertex_of_variable.size())
        instance.add_variable();
    auto var = [&](VertexIndex u) {
        auto x = ctx.variable_of[u];
        if (x == unmapped)
            throw SolverInternalError("vertex '" + ctx.g.vertex(u).id + "' has no variable");
        return x;
    };
    auto per_edge = [&](const string & colour, bool equal) {
        for (auto e : edges_of_colour(ctx.g, colour)) {
            auto & edge = ctx.g.edge(e);
            if (edge.kind == EdgeKind::SemiEdge)
                continue;
            if (equal)
                instance.add_equivalence(var(edge.tail), var(edge.head));
            else
                instance.add_antivalence(var(edge.tail), var(edge.head));
        }
    };
    auto pairs_apart = [&](const vector<VertexIndex> & vertices, const string & colour, Side side) {
        for (auto u : vertices) {
            auto n = neighbours(ctx.g, u, colour, side);
            if (n.size() == 2)
                instance.add_antivalence(var(n[0]), var(n[1]));
            else if (n.size() == 1 && side == Side::Any)
                instance.add_antivalence(var(u), var(n[0]));
            else
                throw SolverInternalError("vertex '" + ctx.g.vertex(u).id + "' has " + std::to_string(n.size()) + " neighbours of colour '"
                    + colour + "'");
        }
    };

    for (auto & record : ctx.shapes) {
        bool first = ctx.doublet(record.block), second = record.other_block ? ctx.doublet(*record.other_block) : first;
        auto s = subcase_of(record, first, second);
        auto & colour = record.colour;
        if (s == "4A" || s == "4B" || s == "4C" || s == "5A")
            per_edge(colour, true);
        else if (s == "5B")
            per_edge(colour, false);
        else if (s == "4D")
            pairs_apart(ctx.gp.partition.blocks[record.block], colour, Side::Any);
        else if (s == "5D") {
            pairs_apart(ctx.gp.partition.blocks[record.block], colour, Side::Out);
            pairs_apart(ctx.gp.partition.blocks[record.block], colour, Side::In);
        }
        else if (s == "5E") {
            auto singleton = first ? *record.other_block : record.block;
            pairs_apart(ctx.gp.partition.blocks[singleton], colour, Side::Any);
        }
        else if (s == "5F") {
            pairs_apart(ctx.gp.partition.blocks[record.block], colour, Side::Any);
            pairs_apart(ctx.gp.partition.blocks[*record.other_block], colour, Side::Any);
        }
        else if (s == "5G") {
            auto bi = ctx.hp.partition.blocks[record.block][0];
            auto bj = ctx.hp.partition.blocks[*record.other_block][0];
            per_edge(colour, adjacent(ctx.h, bi, bj, colour));
        }
    }
}

auto coverkit::vertex_map_from_assignment(const SolverContext & ctx, const vector<bool> & assignment) -> vector<VertexIndex>
{
    vector<VertexIndex> fv(ctx.g.vertex_count(), unmapped);
    for (VertexIndex u = 0; u < fv.size(); ++u) {
        auto & block = ctx.hp.partition.blocks[ctx.gp.partition.block_of[u]];
        auto x = ctx.variable_of[u];
        fv[u] = x == unmapped || assignment.at(x) ? block[0] : block[1];
    }
    return fv;
}

auto coverkit::complete_edge_mapping(const Graph & g, const Graph & h, const vector<VertexIndex> & fv, SolveTrace & trace) -> CoveringProjection
{
    CoveringProjection result{fv, vector<EdgeIndex>(g.edge_count(), unmapped)};
    auto fibre_of = fibres(h, fv);
    std::set<EdgeIndex> recorded;
    for (auto & [_, edges] : trace.matchings)
        recorded.insert(edges.begin(), edges.end());

    for (auto & c : group_edges(g, h, fv)) {
        auto where = "colour '" + c.colour + "' at '" + h.vertex(c.x).id + "'" + (c.x != c.y ? " -> '" + h.vertex(c.y).id + "'" : "");
        string how;
        bool ok = false;
        switch (c.type) {
        case EdgeClassType::Cross:
        case EdgeClassType::CrossDirected:
            ok = assign_cross_class(g, fibre_of, fv, c, result.edge_map);
            how = std::to_string(c.h_normal.size()) + " perfect matchings";
            break;
        case EdgeClassType::FibreDirected:
            ok = assign_fibre_directed_class(g, fibre_of, c, result.edge_map);
            how = std::to_string(c.h_dloops.size()) + " directed cycle covers";
            break;
        case EdgeClassType::Fibre:
            if (c.h_semis.empty()) {
                ok = assign_fibre_loops(g, fibre_of[c.x], c.g_edges, c.h_loops, result.edge_map);
                how = std::to_string(c.h_loops.size()) + " 2-factors onto the loops";
            }
            else if (c.h_semis.size() == 1)
                ok = assign_one_semi(g, fibre_of[c.x], c, recorded, result.edge_map, how);
            else if (c.h_semis.size() == 2 && c.h_loops.empty()) {
                ok = alternate(g, c, result.edge_map);
                how = "alternation between the two semi-edges";
            }
            else
                throw SolverInternalError(where + " has a block graph outside the polynomial cases");
            break;
        }
        if (! ok)
            throw SolverInternalError("the fibre graph of " + where + " cannot be split as required");
        trace.completion_log.push_back(where + ": " + how);
    }
    return result;
}

auto coverkit::solve_cover(const Graph & g, const Graph & h) -> SolveResult
{
    SolveResult result{SolveStatus::Refused, std::nullopt, {}, solver_refusal(h)};
    if (! result.reason.empty())
        return result;

    result.status = SolveStatus::DoesNotCover;
    auto ctx = prepare_context(g, h, result.trace);
    if (! ctx) {
        result.reason = "the degree refinement matrices differ";
        return result;
    }
    if (! check_singletons(*ctx, result.trace)) {
        result.reason = result.trace.failure;
        return result;
    }
    TwoSatInstance instance;
    if (! preprocess_doublets(*ctx, instance, result.trace)) {
        result.reason = result.trace.failure;
        return result;
    }
    build_2sat(*ctx, instance);
    auto assignment = solve_2sat(instance);
    if (! assignment) {
        result.reason = "the 2-SAT formula is unsatisfiable";
        return result;
    }
    for (size_t x = 0; x < assignment->size(); ++x)
        result.trace.assignment.emplace_back(ctx->vertex_of_variable[x], (*assignment)[x]);

    auto fv = vertex_map_from_assignment(*ctx, *assignment);
    if (! is_degree_obedient(ctx->g, ctx->h, fv))
        throw SolverInternalError("the 2-SAT assignment does not give a degree-obedient vertex map");
    auto projection = complete_edge_mapping(ctx->g, ctx->h, fv, result.trace);
    auto check = verify_cover(g, h, projection);
    if (! check.valid())
        throw SolverInternalError("constructed projection is invalid: " + check.violations.front().message);

    result.status = SolveStatus::Covers;
    result.projection = std::move(projection);
    result.reason = "covering projection constructed";
    return result;
}
