#ifndef COVERKIT_GUARD_COVERKIT_EDGE_ASSIGNMENT_HPP
#define COVERKIT_GUARD_COVERKIT_EDGE_ASSIGNMENT_HPP 1

#include <coverkit/graph.hpp>

#include <string>
#include <vector>

namespace coverkit
{
    enum class EdgeClassType
    {
        Cross,
        CrossDirected,
        Fibre,
        FibreDirected
    };

    /**
     * The G-edges of one colour that must map onto the H-edges of that colour
     * between two fibres (Cross: x < y, CrossDirected: x is the tail fibre) or
     * inside one fibre (x == y).
     */
    struct EdgeClass
    {
        EdgeClassType type;
        std::string colour;
        VertexIndex x, y;
        std::vector<EdgeIndex> g_edges;
        std::vector<EdgeIndex> h_normal, h_loops, h_semis, h_dloops;
    };

    /// Every H-edge appears in exactly one class, as does every G-edge.
    [[nodiscard]] auto group_edges(const Graph & g, const Graph & h, const std::vector<VertexIndex> & fv) -> std::vector<EdgeClass>;

    [[nodiscard]] auto fibres(const Graph & h, const std::vector<VertexIndex> & fv) -> std::vector<std::vector<VertexIndex>>;

    /// Splits a cross class with a regular bipartite factorization; false if not regular.
    auto assign_cross_class(const Graph & g, const std::vector<std::vector<VertexIndex>> & fibre_of, const std::vector<VertexIndex> & fv,
        const EdgeClass & c, std::vector<EdgeIndex> & edge_map) -> bool;

    /// Directed in-fibre arcs and directed loops onto the directed loops at x.
    auto assign_fibre_directed_class(const Graph & g, const std::vector<std::vector<VertexIndex>> & fibre_of, const EdgeClass & c,
        std::vector<EdgeIndex> & edge_map) -> bool;

    /// The given in-fibre normal edges and loops onto the loops at x via 2-factors.
    auto assign_fibre_loops(const Graph & g, const std::vector<VertexIndex> & fibre, const std::vector<EdgeIndex> & edges,
        const std::vector<EdgeIndex> & h_loops, std::vector<EdgeIndex> & edge_map) -> bool;
}

#endif
