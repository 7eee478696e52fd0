#ifndef COVERKIT_GUARD_COVERKIT_FACTORIZATION_HPP
#define COVERKIT_GUARD_COVERKIT_FACTORIZATION_HPP 1

#include <coverkit/graph.hpp>
#include <coverkit/matching.hpp>

#include <vector>

namespace coverkit
{
    /**
     * Splits a k-regular bipartite multigraph with sides 0..n-1 and 0..n-1
     * (pairs are (left, right)) into k perfect matchings, as edge indices.
     */
    [[nodiscard]] auto split_regular_bipartite(std::size_t n, const std::vector<IndexPair> & edges, std::size_t k)
        -> std::vector<std::vector<std::size_t>>;

    /// Pairs (v, v) are loops and count twice towards the degree.
    [[nodiscard]] auto split_two_factors(std::size_t n, const std::vector<IndexPair> & edges, std::size_t k)
        -> std::vector<std::vector<std::size_t>>;

    /// Pairs are (tail, head); (v, v) is a directed loop.
    [[nodiscard]] auto split_directed_factors(std::size_t n, const std::vector<IndexPair> & arcs, std::size_t k)
        -> std::vector<std::vector<std::size_t>>;

    [[nodiscard]] auto bipartite_k_factorization(const Graph & g, std::size_t k) -> std::vector<std::vector<EdgeIndex>>;
    [[nodiscard]] auto two_factorization(const Graph & g, std::size_t k) -> std::vector<std::vector<EdgeIndex>>;
    [[nodiscard]] auto directed_cycle_cover_decomposition(const Graph & g, std::size_t k) -> std::vector<std::vector<EdgeIndex>>;
}

#endif
