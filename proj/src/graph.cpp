#include <coverkit/graph.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

GraphError::GraphError(const string & message) :
    runtime_error(message)
{
}

ParseError::ParseError(int line, const string & message) :
    runtime_error("line " + std::to_string(line) + ": " + message),
    _line(line)
{
}

auto ParseError::line() const -> int
{
    return _line;
}

auto coverkit::to_string(EdgeKind kind) -> string
{
    switch (kind) {
    case EdgeKind::UndirectedNormal: return "edge";
    case EdgeKind::DirectedNormal: return "arc";
    case EdgeKind::UndirectedLoop: return "loop";
    case EdgeKind::DirectedLoop: return "dloop";
    case EdgeKind::SemiEdge: return "semi";
    }
    throw GraphError("unknown edge kind");
}

auto coverkit::to_string(Direction direction) -> string
{
    switch (direction) {
    case Direction::Undirected: return "undirected";
    case Direction::Out: return "out";
    case Direction::In: return "in";
    }
    throw GraphError("unknown direction");
}

auto coverkit::is_directed(EdgeKind kind) -> bool
{
    return kind == EdgeKind::DirectedNormal || kind == EdgeKind::DirectedLoop;
}

auto Edge::other(VertexIndex v) const -> VertexIndex
{
    return v == tail ? head : tail;
}

Graph::Graph(string name) :
    _name(std::move(name))
{
}

auto Graph::name() const -> const string &
{
    return _name;
}

auto Graph::set_name(string name) -> void
{
    _name = std::move(name);
}

auto Graph::claim_colour(const string & colour, ColourUse use) -> void
{
    if (colour.empty())
        throw GraphError("empty colour");
    auto [it, inserted] = _colours.emplace(colour, use);
    if (! inserted && it->second != use)
        throw GraphError("colour '" + colour + "' is used for more than one of vertices, directed edges and undirected edges");
}

auto Graph::add_vertex(string id, string colour) -> VertexIndex
{
    if (id.empty())
        throw GraphError("empty vertex id");
    if (_vertex_ids.contains(id))
        throw GraphError("duplicate vertex id '" + id + "'");
    claim_colour(colour, ColourUse::Vertex);
    VertexIndex v = _vertices.size();
    _vertex_ids.emplace(id, v);
    _vertices.push_back(Vertex{std::move(id), std::move(colour)});
    _incident.emplace_back();
    return v;
}

auto Graph::add_edge(string id, EdgeKind kind, string colour, VertexIndex tail, VertexIndex head) -> EdgeIndex
{
    if (id.empty())
        throw GraphError("empty edge id");
    if (_edge_ids.contains(id))
        throw GraphError("duplicate edge id '" + id + "'");
    if (tail >= _vertices.size() || head >= _vertices.size())
        throw GraphError("edge '" + id + "' has a dangling endpoint");

    switch (kind) {
    case EdgeKind::UndirectedNormal:
        if (tail == head)
            throw GraphError("edge '" + id + "' joins a vertex to itself, use a loop");
        break;
    case EdgeKind::DirectedNormal:
        if (tail == head)
            throw GraphError("arc '" + id + "' joins a vertex to itself, use a directed loop");
        break;
    case EdgeKind::UndirectedLoop:
    case EdgeKind::DirectedLoop:
    case EdgeKind::SemiEdge:
        if (tail != head)
            throw GraphError("edge '" + id + "' of kind " + to_string(kind) + " must have a single endpoint");
        break;
    }

    claim_colour(colour, is_directed(kind) ? ColourUse::DirectedEdge : ColourUse::UndirectedEdge);
    EdgeIndex e = _edges.size();
    _edge_ids.emplace(id, e);
    _edges.push_back(Edge{std::move(id), kind, std::move(colour), tail, head});
    _incident[tail].push_back(e);
    if (head != tail)
        _incident[head].push_back(e);
    return e;
}

auto Graph::add_edge(EdgeKind kind, string colour, VertexIndex tail, VertexIndex head) -> EdgeIndex
{
    string id;
    do
        id = "e" + std::to_string(_next_edge_id++);
    while (_edge_ids.contains(id));
    return add_edge(std::move(id), kind, std::move(colour), tail, head);
}

auto Graph::vertex_count() const -> size_t
{
    return _vertices.size();
}

auto Graph::edge_count() const -> size_t
{
    return _edges.size();
}

auto Graph::vertex(VertexIndex v) const -> const Vertex &
{
    return _vertices.at(v);
}

auto Graph::edge(EdgeIndex e) const -> const Edge &
{
    return _edges.at(e);
}

auto Graph::vertices() const -> const vector<Vertex> &
{
    return _vertices;
}

auto Graph::edges() const -> const vector<Edge> &
{
    return _edges;
}

auto Graph::incident(VertexIndex v) const -> const vector<EdgeIndex> &
{
    return _incident.at(v);
}

auto Graph::find_vertex(const string & id) const -> optional<VertexIndex>
{
    auto it = _vertex_ids.find(id);
    if (it == _vertex_ids.end())
        return std::nullopt;
    return it->second;
}

auto Graph::find_edge(const string & id) const -> optional<EdgeIndex>
{
    auto it = _edge_ids.find(id);
    if (it == _edge_ids.end())
        return std::nullopt;
    return it->second;
}

auto Graph::vertex_index(const string & id) const -> VertexIndex
{
    auto v = find_vertex(id);
    if (! v)
        throw GraphError("unknown vertex '" + id + "'");
    return *v;
}

auto Graph::edge_index(const string & id) const -> EdgeIndex
{
    auto e = find_edge(id);
    if (! e)
        throw GraphError("unknown edge '" + id + "'");
    return *e;
}

auto Graph::colour_use(const string & colour) const -> optional<ColourUse>
{
    auto it = _colours.find(colour);
    if (it == _colours.end())
        return std::nullopt;
    return it->second;
}

auto Graph::edge_colours() const -> vector<string>
{
    std::set<string> seen;
    for (auto & e : _edges)
        seen.insert(e.colour);
    return {seen.begin(), seen.end()};
}

auto coverkit::degree(const Graph & g, VertexIndex v, const DegreeQuery & q) -> size_t
{
    if (v >= g.vertex_count())
        throw GraphError("unknown vertex index " + std::to_string(v));
    auto use = g.colour_use(q.colour);
    if (use == Graph::ColourUse::Vertex)
        throw GraphError("'" + q.colour + "' is a vertex colour");
    if (use) {
        bool directed = *use == Graph::ColourUse::DirectedEdge;
        if (directed != (q.direction != Direction::Undirected))
            throw GraphError("direction does not match colour '" + q.colour + "'");
    }

    size_t result = 0;
    for (auto e : g.incident(v)) {
        auto & edge = g.edge(e);
        if (edge.colour != q.colour)
            continue;
        switch (edge.kind) {
        case EdgeKind::UndirectedNormal:
        case EdgeKind::SemiEdge: ++result; break;
        case EdgeKind::UndirectedLoop: result += 2; break;
        case EdgeKind::DirectedLoop: ++result; break;
        case EdgeKind::DirectedNormal:
            if ((q.direction == Direction::Out && edge.tail == v) || (q.direction == Direction::In && edge.head == v))
                ++result;
            break;
        }
    }
    return result;
}

auto coverkit::total_degree(const Graph & g, VertexIndex v) -> size_t
{
    size_t result = 0;
    for (auto e : g.incident(v)) {
        auto kind = g.edge(e).kind;
        result += (kind == EdgeKind::UndirectedLoop || kind == EdgeKind::DirectedLoop) ? 2 : 1;
    }
    return result;
}

namespace
{
    auto copy_vertices(const Graph & g, const vector<VertexIndex> & subset, vector<optional<VertexIndex>> & map_to) -> Graph
    {
        Graph result(g.name());
        map_to.assign(g.vertex_count(), std::nullopt);
        for (auto v : subset) {
            if (v >= g.vertex_count())
                throw GraphError("unknown vertex index " + std::to_string(v));
            if (map_to[v])
                throw GraphError("vertex '" + g.vertex(v).id + "' repeated in subset");
            map_to[v] = result.add_vertex(g.vertex(v).id, g.vertex(v).colour);
        }
        return result;
    }
}

auto coverkit::induced_subgraph(const Graph & g, const vector<VertexIndex> & subset) -> Graph
{
    vector<optional<VertexIndex>> map_to;
    Graph result = copy_vertices(g, subset, map_to);
    for (auto & e : g.edges())
        if (map_to[e.tail] && map_to[e.head])
            result.add_edge(e.id, e.kind, e.colour, *map_to[e.tail], *map_to[e.head]);
    return result;
}

auto coverkit::colour_subgraph(const Graph & g, const vector<string> & colours) -> Graph
{
    std::set<string> wanted(colours.begin(), colours.end());
    vector<VertexIndex> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    vector<optional<VertexIndex>> map_to;
    Graph result = copy_vertices(g, all, map_to);
    for (auto & e : g.edges())
        if (wanted.contains(e.colour))
            result.add_edge(e.id, e.kind, e.colour, e.tail, e.head);
    return result;
}

auto coverkit::components(const Graph & g) -> vector<vector<VertexIndex>>
{
    vector<vector<VertexIndex>> result;
    vector<bool> seen(g.vertex_count(), false);
    for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
        if (seen[start])
            continue;
        vector<VertexIndex> component{start};
        seen[start] = true;
        for (size_t i = 0; i < component.size(); ++i)
            for (auto e : g.incident(component[i])) {
                auto w = g.edge(e).other(component[i]);
                if (! seen[w]) {
                    seen[w] = true;
                    component.push_back(w);
                }
            }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

auto coverkit::is_connected(const Graph & g) -> bool
{
    return g.vertex_count() > 0 && components(g).size() == 1;
}

auto coverkit::is_tree(const Graph & g) -> bool
{
    if (! is_connected(g))
        return false;
    std::set<std::pair<VertexIndex, VertexIndex>> seen;
    for (auto & e : g.edges()) {
        if (e.kind != EdgeKind::UndirectedNormal && e.kind != EdgeKind::DirectedNormal)
            return false;
        if (! seen.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head)).second)
            return false;
    }
    return g.edge_count() + 1 == g.vertex_count();
}

auto coverkit::is_path_or_cycle(const Graph & g) -> bool
{
    if (! is_connected(g))
        return false;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (total_degree(g, v) > 2)
            return false;
    return true;
}

auto coverkit::to_string(ComponentShape shape) -> string
{
    switch (shape) {
    case ComponentShape::OpenPath: return "open path";
    case ComponentShape::EvenCycle: return "even cycle";
    case ComponentShape::OddCycle: return "odd cycle";
    case ComponentShape::Other: return "other";
    }
    throw GraphError("unknown component shape");
}

auto coverkit::classify_component_shape(const Graph & g) -> ComponentShape
{
    if (! is_connected(g))
        throw GraphError("component shape needs a connected graph");
    auto colours = g.edge_colours();
    if (colours.size() > 1)
        throw GraphError("component shape needs a monochromatic graph");
    for (auto & e : g.edges())
        if (is_directed(e.kind))
            throw GraphError("component shape needs an undirected graph");

    size_t semis = 0, links = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (total_degree(g, v) > 2)
            return ComponentShape::Other;
    for (auto & e : g.edges()) {
        if (e.kind == EdgeKind::SemiEdge)
            ++semis;
        else
            ++links;
    }

    // with max degree 2 and connectivity, |links| = |V| means exactly one cycle
    if (links + 1 == g.vertex_count())
        return ComponentShape::OpenPath;
    if (semis == 0 && links == g.vertex_count())
        return links % 2 == 0 ? ComponentShape::EvenCycle : ComponentShape::OddCycle;
    return ComponentShape::Other;
}

auto coverkit::is_simple(const Graph & g) -> bool
{
    std::set<std::pair<VertexIndex, VertexIndex>> pairs;
    for (auto & e : g.edges()) {
        if (e.tail == e.head)
            return false;
        if (! pairs.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head)).second)
            return false;
    }
    return true;
}
