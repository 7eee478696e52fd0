#ifndef COVERKIT_GUARD_COVERKIT_RANDOM_GRAPHS_HPP
#define COVERKIT_GUARD_COVERKIT_RANDOM_GRAPHS_HPP 1

#include <coverkit/cover.hpp>
#include <coverkit/graph.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace coverkit
{
    enum class RegularKind
    {
        Bipartite,
        Even,
        Directed
    };

    [[nodiscard]] auto to_string(RegularKind kind) -> std::string;

    struct RegularGraph
    {
        Graph graph;
        /// k disjoint edge classes; each is a perfect matching, or a 1-in-1-out spanning subgraph for Directed.
        std::vector<std::vector<EdgeIndex>> colouring;
    };

    /**
     * A simple k-regular graph built from k colour classes of a
     * 1-factorization of K_{m,m} (Bipartite, 2m vertices, 0 < k <= m) or of
     * K_m (Even, m even, 0 < k < m), vertices shuffled. Directed gives a
     * k-in-k-out digraph on m vertices from 2k classes of K_m paired into
     * oriented cycles (m even, 0 < 2k < m). Throws std::invalid_argument on
     * infeasible parameters.
     */
    [[nodiscard]] auto random_regular(RegularKind kind, std::size_t k, std::size_t m, std::uint64_t seed) -> RegularGraph;

    struct RandomLift
    {
        Graph graph;
        CoveringProjection projection;
    };

    /**
     * An n-fold cover of h: normal edges lift along random permutations,
     * loops and directed loops along random permutations (fixed points stay
     * loops) and semi-edges along random involutions (fixed points stay
     * semi-edges). Vertex (v, i) has id v#i.
     */
    [[nodiscard]] auto random_lift(const Graph & h, std::size_t n, std::mt19937_64 & rng) -> RandomLift;

    /**
     * One random move that keeps every vertex's neighbour count per colour
     * and per block of the given block assignment: swapping the ends of two
     * edges, trading two semi-edges for an edge (or back), or trading a loop
     * and an edge for two edges (or back), with the directed analogues.
     * Returns false if the sampled move did not apply.
     */
    auto random_switch(Graph & g, const std::vector<std::size_t> & block_of, std::mt19937_64 & rng) -> bool;

    struct RandomGraphOptions
    {
        std::size_t vertices = 6;
        std::size_t extra_edges = 3;
        std::size_t vertex_colours = 1;
        std::size_t edge_colours = 2;
        bool loops = true;
        bool semi_edges = true;
        bool directed = true;
    };

    /// A connected graph: a random spanning tree plus extra edges of random kinds and colours.
    [[nodiscard]] auto random_connected_graph(const RandomGraphOptions & options, std::mt19937_64 & rng) -> Graph;
}

#endif
