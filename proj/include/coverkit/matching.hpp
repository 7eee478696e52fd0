#ifndef COVERKIT_GUARD_COVERKIT_MATCHING_HPP
#define COVERKIT_GUARD_COVERKIT_MATCHING_HPP 1

#include <coverkit/graph.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace coverkit
{
    using IndexPair = std::pair<std::size_t, std::size_t>;

    /**
     * Maximum matching in a general multigraph on vertices 0..n-1 given as
     * an edge list; self-pairs are ignored. Returns indices into edges.
     */
    [[nodiscard]] auto maximum_matching(std::size_t n, const std::vector<IndexPair> & edges) -> std::vector<std::size_t>;

    [[nodiscard]] auto perfect_matching(std::size_t n, const std::vector<IndexPair> & edges) -> std::optional<std::vector<std::size_t>>;

    /// Loops and semi-edges are ignored; arcs are rejected.
    [[nodiscard]] auto general_perfect_matching(const Graph & g) -> std::optional<std::vector<EdgeIndex>>;
}

#endif
