#ifndef COVERKIT_GUARD_COVERKIT_GRAPH_HPP
#define COVERKIT_GUARD_COVERKIT_GRAPH_HPP 1

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverkit
{
    using VertexIndex = std::size_t;
    using EdgeIndex = std::size_t;

    class GraphError : public std::runtime_error
    {
    public:
        explicit GraphError(const std::string & message);
    };

    class ParseError : public std::runtime_error
    {
    private:
        int _line;

    public:
        ParseError(int line, const std::string & message);

        [[nodiscard]] auto line() const -> int;
    };

    enum class EdgeKind
    {
        UndirectedNormal,
        DirectedNormal,
        UndirectedLoop,
        DirectedLoop,
        SemiEdge
    };

    enum class Direction
    {
        Undirected,
        Out,
        In
    };

    auto to_string(EdgeKind kind) -> std::string;
    auto to_string(Direction direction) -> std::string;

    [[nodiscard]] auto is_directed(EdgeKind kind) -> bool;

    struct Vertex
    {
        std::string id;
        std::string colour;
    };

    /**
     * For normal edges tail and head are the two endpoints (u, v or from,
     * to); loops and semi-edges have tail == head.
     */
    struct Edge
    {
        std::string id;
        EdgeKind kind;
        std::string colour;
        VertexIndex tail;
        VertexIndex head;

        [[nodiscard]] auto other(VertexIndex v) const -> VertexIndex;
    };

    struct DegreeQuery
    {
        std::string colour;
        Direction direction = Direction::Undirected;
    };

    /**
     * A coloured mixed multigraph with semi-edges. Vertex and edge indices
     * are stable and dense; ids are the external names.
     */
    class Graph
    {
    public:
        enum class ColourUse
        {
            Vertex,
            DirectedEdge,
            UndirectedEdge
        };

    private:
        std::string _name;
        std::vector<Vertex> _vertices;
        std::vector<Edge> _edges;
        std::vector<std::vector<EdgeIndex>> _incident;
        std::map<std::string, VertexIndex> _vertex_ids;
        std::map<std::string, EdgeIndex> _edge_ids;
        std::map<std::string, ColourUse> _colours;
        std::size_t _next_edge_id = 0;

        auto claim_colour(const std::string & colour, ColourUse use) -> void;

    public:
        explicit Graph(std::string name = "g");

        [[nodiscard]] auto name() const -> const std::string &;
        auto set_name(std::string name) -> void;

        auto add_vertex(std::string id, std::string colour) -> VertexIndex;
        auto add_edge(std::string id, EdgeKind kind, std::string colour, VertexIndex tail, VertexIndex head) -> EdgeIndex;

        /// Adds an edge with a fresh id of the form e<n>.
        auto add_edge(EdgeKind kind, std::string colour, VertexIndex tail, VertexIndex head) -> EdgeIndex;

        [[nodiscard]] auto vertex_count() const -> std::size_t;
        [[nodiscard]] auto edge_count() const -> std::size_t;
        [[nodiscard]] auto vertex(VertexIndex v) const -> const Vertex &;
        [[nodiscard]] auto edge(EdgeIndex e) const -> const Edge &;
        [[nodiscard]] auto vertices() const -> const std::vector<Vertex> &;
        [[nodiscard]] auto edges() const -> const std::vector<Edge> &;

        /// Each incident edge appears once, loops and semi-edges included.
        [[nodiscard]] auto incident(VertexIndex v) const -> const std::vector<EdgeIndex> &;

        [[nodiscard]] auto find_vertex(const std::string & id) const -> std::optional<VertexIndex>;
        [[nodiscard]] auto find_edge(const std::string & id) const -> std::optional<EdgeIndex>;
        [[nodiscard]] auto vertex_index(const std::string & id) const -> VertexIndex;
        [[nodiscard]] auto edge_index(const std::string & id) const -> EdgeIndex;

        [[nodiscard]] auto colour_use(const std::string & colour) const -> std::optional<ColourUse>;
        [[nodiscard]] auto edge_colours() const -> std::vector<std::string>;
    };

    [[nodiscard]] auto parse_graph(const std::string & text) -> Graph;
    [[nodiscard]] auto serialize_graph(const Graph & g) -> std::string;
    [[nodiscard]] auto read_graph_file(const std::string & path) -> Graph;

    [[nodiscard]] auto degree(const Graph & g, VertexIndex v, const DegreeQuery & q) -> std::size_t;

    /// Degree over all colours, loops and directed loops counting two, semi-edges one.
    [[nodiscard]] auto total_degree(const Graph & g, VertexIndex v) -> std::size_t;

    /// G[W]: vertices of W in the given order, edges with all endpoints inside.
    [[nodiscard]] auto induced_subgraph(const Graph & g, const std::vector<VertexIndex> & subset) -> Graph;

    /// G^A: every vertex, only edges with a colour in A.
    [[nodiscard]] auto colour_subgraph(const Graph & g, const std::vector<std::string> & colours) -> Graph;

    /// Components sorted by smallest member; semi-edges do not connect.
    [[nodiscard]] auto components(const Graph & g) -> std::vector<std::vector<VertexIndex>>;
    [[nodiscard]] auto is_connected(const Graph & g) -> bool;

    /// A tree has no loops, semi-edges or parallel edges and |E| = |V| - 1.
    [[nodiscard]] auto is_tree(const Graph & g) -> bool;

    /// Connected and every total degree at most 2.
    [[nodiscard]] auto is_path_or_cycle(const Graph & g) -> bool;

    /// No loops, semi-edges or directed loops, and no two edges on the same pair of vertices in either direction.
    [[nodiscard]] auto is_simple(const Graph & g) -> bool;

    enum class ComponentShape
    {
        OpenPath,
        EvenCycle,
        OddCycle,
        Other
    };

    auto to_string(ComponentShape shape) -> std::string;

    [[nodiscard]] auto classify_component_shape(const Graph & g) -> ComponentShape;
}

#endif
