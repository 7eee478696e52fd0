#include <coverkit/cover.hpp>

#include <map>
#include <tuple>

using std::map;
using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

auto coverkit::projection_to_json(const Graph & g, const Graph & h, const CoveringProjection & f) -> nlohmann::json
{
    nlohmann::json fv = nlohmann::json::object(), fe = nlohmann::json::object();
    for (VertexIndex v = 0; v < g.vertex_count() && v < f.vertex_map.size(); ++v)
        if (f.vertex_map[v] < h.vertex_count())
            fv[g.vertex(v).id] = h.vertex(f.vertex_map[v]).id;
    for (EdgeIndex e = 0; e < g.edge_count() && e < f.edge_map.size(); ++e)
        if (f.edge_map[e] < h.edge_count())
            fe[g.edge(e).id] = h.edge(f.edge_map[e]).id;
    return nlohmann::json{{"fv", fv}, {"fe", fe}};
}

auto coverkit::projection_from_json(const Graph & g, const Graph & h, const nlohmann::json & j) -> CoveringProjection
{
    CoveringProjection result{vector<VertexIndex>(g.vertex_count(), unmapped), vector<EdgeIndex>(g.edge_count(), unmapped)};
    if (! j.is_object())
        throw GraphError("projection must be a JSON object");
    if (j.contains("fv"))
        for (auto & [gid, hid] : j.at("fv").items())
            result.vertex_map[g.vertex_index(gid)] = h.vertex_index(hid.get<string>());
    if (j.contains("fe"))
        for (auto & [gid, hid] : j.at("fe").items())
            result.edge_map[g.edge_index(gid)] = h.edge_index(hid.get<string>());
    return result;
}

auto coverkit::to_string(ViolationKind kind) -> string
{
    switch (kind) {
    case ViolationKind::Shape: return "shape";
    case ViolationKind::Unmapped: return "unmapped";
    case ViolationKind::VertexColour: return "vertex colour";
    case ViolationKind::EdgeColour: return "edge colour";
    case ViolationKind::Incidence: return "incidence";
    case ViolationKind::LocalBijection: return "local bijection";
    case ViolationKind::FibreSize: return "fibre size";
    }
    throw GraphError("unknown violation kind");
}

auto VerifyResult::valid() const -> bool
{
    return violations.empty();
}

auto VerifyResult::to_json() const -> nlohmann::json
{
    auto list = nlohmann::json::array();
    for (auto & v : violations)
        list.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    return nlohmann::json{{"valid", valid()}, {"violations", list}};
}

namespace
{
    auto incidence_ok(const Edge & ge, const Edge & he, VertexIndex ft, VertexIndex fh) -> bool
    {
        switch (ge.kind) {
        case EdgeKind::UndirectedNormal:
            if (he.kind == EdgeKind::UndirectedNormal)
                return (he.tail == ft && he.head == fh) || (he.tail == fh && he.head == ft);
            return (he.kind == EdgeKind::UndirectedLoop || he.kind == EdgeKind::SemiEdge) && ft == fh && he.tail == ft;
        case EdgeKind::DirectedNormal:
            if (he.kind == EdgeKind::DirectedNormal)
                return he.tail == ft && he.head == fh;
            return he.kind == EdgeKind::DirectedLoop && ft == fh && he.tail == ft;
        case EdgeKind::UndirectedLoop:
        case EdgeKind::DirectedLoop:
        case EdgeKind::SemiEdge:
            return he.kind == ge.kind && he.tail == ft;
        }
        return false;
    }
}

auto coverkit::verify_cover(const Graph & g, const Graph & h, const CoveringProjection & f) -> VerifyResult
{
    VerifyResult result;
    auto add = [&](ViolationKind kind, string message) { result.violations.push_back(Violation{kind, std::move(message)}); };

    if (f.vertex_map.size() != g.vertex_count() || f.edge_map.size() != g.edge_count()) {
        add(ViolationKind::Shape, "mapping sizes do not match the graph");
        return result;
    }

    bool complete = true;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (f.vertex_map[v] >= h.vertex_count()) {
            add(ViolationKind::Unmapped, "vertex '" + g.vertex(v).id + "' is not mapped");
            complete = false;
        }
        else if (g.vertex(v).colour != h.vertex(f.vertex_map[v]).colour)
            add(ViolationKind::VertexColour, "vertex '" + g.vertex(v).id + "' changes colour");
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        if (f.edge_map[e] >= h.edge_count()) {
            add(ViolationKind::Unmapped, "edge '" + g.edge(e).id + "' is not mapped");
            complete = false;
        }
    if (! complete)
        return result;

    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        auto & ge = g.edge(e);
        auto & he = h.edge(f.edge_map[e]);
        if (ge.colour != he.colour)
            add(ViolationKind::EdgeColour, "edge '" + ge.id + "' changes colour");
        if (! incidence_ok(ge, he, f.vertex_map[ge.tail], f.vertex_map[ge.head]))
            add(ViolationKind::Incidence, "edge '" + ge.id + "' of kind " + to_string(ge.kind) + " cannot map to '" + he.id
                    + "' of kind " + to_string(he.kind) + " under the vertex map");
    }
    if (! result.valid())
        return result;

    // dart counts: every H edge at f(v) must be hit the right number of times from v
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        auto x = f.vertex_map[v];
        map<std::pair<EdgeIndex, Direction>, size_t> darts;
        for (auto e : g.incident(v)) {
            auto & ge = g.edge(e);
            auto target = f.edge_map[e];
            switch (ge.kind) {
            case EdgeKind::UndirectedNormal:
            case EdgeKind::SemiEdge: ++darts[{target, Direction::Undirected}]; break;
            case EdgeKind::UndirectedLoop: darts[{target, Direction::Undirected}] += 2; break;
            case EdgeKind::DirectedNormal: ++darts[{target, ge.tail == v ? Direction::Out : Direction::In}]; break;
            case EdgeKind::DirectedLoop:
                ++darts[{target, Direction::Out}];
                ++darts[{target, Direction::In}];
                break;
            }
        }

        map<std::pair<EdgeIndex, Direction>, size_t> wanted;
        for (auto e : h.incident(x)) {
            auto & he = h.edge(e);
            switch (he.kind) {
            case EdgeKind::UndirectedNormal:
            case EdgeKind::SemiEdge: wanted[{e, Direction::Undirected}] = 1; break;
            case EdgeKind::UndirectedLoop: wanted[{e, Direction::Undirected}] = 2; break;
            case EdgeKind::DirectedNormal: wanted[{e, he.tail == x ? Direction::Out : Direction::In}] = 1; break;
            case EdgeKind::DirectedLoop:
                wanted[{e, Direction::Out}] = 1;
                wanted[{e, Direction::In}] = 1;
                break;
            }
        }

        if (darts != wanted) {
            for (auto & [key, count] : wanted) {
                auto it = darts.find(key);
                auto have = it == darts.end() ? 0 : it->second;
                if (have != count)
                    add(ViolationKind::LocalBijection, "local bijection broken at vertex '" + g.vertex(v).id + "': H-edge '"
                            + h.edge(key.first).id + "' is hit " + std::to_string(have) + " times instead of " + std::to_string(count));
            }
        }
    }

    vector<size_t> fibre(h.vertex_count(), 0);
    for (auto x : f.vertex_map)
        ++fibre[x];
    for (VertexIndex x = 1; x < h.vertex_count(); ++x)
        if (fibre[x] != fibre[0]) {
            add(ViolationKind::FibreSize, "|f^-1(" + h.vertex(0).id + ")| = " + std::to_string(fibre[0]) + " != |f^-1(" + h.vertex(x).id
                    + ")| = " + std::to_string(fibre[x]));
            break;
        }
    if (h.vertex_count() > 0 && fibre[0] == 0 && result.valid())
        add(ViolationKind::FibreSize, "empty fibres");

    return result;
}

namespace
{
    using Counts = map<std::tuple<string, Direction, VertexIndex>, size_t>;

    auto counts_at(const Graph & g, VertexIndex v, const vector<VertexIndex> & image) -> Counts
    {
        Counts result;
        for (auto e : g.incident(v)) {
            auto & edge = g.edge(e);
            switch (edge.kind) {
            case EdgeKind::UndirectedNormal: ++result[{edge.colour, Direction::Undirected, image[edge.other(v)]}]; break;
            case EdgeKind::SemiEdge: ++result[{edge.colour, Direction::Undirected, image[v]}]; break;
            case EdgeKind::UndirectedLoop: result[{edge.colour, Direction::Undirected, image[v]}] += 2; break;
            case EdgeKind::DirectedNormal:
                if (edge.tail == v)
                    ++result[{edge.colour, Direction::Out, image[edge.head]}];
                else
                    ++result[{edge.colour, Direction::In, image[edge.tail]}];
                break;
            case EdgeKind::DirectedLoop:
                ++result[{edge.colour, Direction::Out, image[v]}];
                ++result[{edge.colour, Direction::In, image[v]}];
                break;
            }
        }
        return result;
    }

    auto semi_counts(const Graph & g, VertexIndex v) -> map<string, size_t>
    {
        map<string, size_t> result;
        for (auto e : g.incident(v))
            if (g.edge(e).kind == EdgeKind::SemiEdge)
                ++result[g.edge(e).colour];
        return result;
    }
}

auto coverkit::is_degree_obedient(const Graph & g, const Graph & h, const vector<VertexIndex> & fv) -> bool
{
    if (fv.size() != g.vertex_count())
        return false;
    for (auto x : fv)
        if (x >= h.vertex_count())
            return false;

    vector<VertexIndex> identity(h.vertex_count());
    for (VertexIndex x = 0; x < h.vertex_count(); ++x)
        identity[x] = x;

    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        auto x = fv[v];
        if (g.vertex(v).colour != h.vertex(x).colour)
            return false;
        if (counts_at(g, v, fv) != counts_at(h, x, identity))
            return false;
        auto target_semis = semi_counts(h, x);
        for (auto & [colour, t] : semi_counts(g, v))
            if (t > target_semis[colour])
                return false;
    }
    return true;
}
