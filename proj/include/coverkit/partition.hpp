#ifndef COVERKIT_GUARD_COVERKIT_PARTITION_HPP
#define COVERKIT_GUARD_COVERKIT_PARTITION_HPP 1

#include <coverkit/graph.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace coverkit
{
    struct Partition
    {
        std::vector<std::vector<VertexIndex>> blocks;
        std::vector<std::size_t> block_of;

        [[nodiscard]] auto size() const -> std::size_t;
    };

    /**
     * Entries are keyed by (from block, to block, colour, direction). A loop
     * counts twice and a semi-edge once towards its own block; a directed
     * loop counts once as Out and once as In.
     */
    struct RefinementMatrix
    {
        using Key = std::tuple<std::size_t, std::size_t, std::string, Direction>;

        std::size_t k = 0;
        std::vector<std::string> block_colours;
        std::map<Key, std::size_t> entries;

        [[nodiscard]] auto at(std::size_t i, std::size_t j, const std::string & colour, Direction d) const -> std::size_t;

        auto operator==(const RefinementMatrix &) const -> bool = default;
    };

    struct DegreePartition
    {
        Partition partition;
        RefinementMatrix matrix;
    };

    /// Per-vertex counts keyed by (colour, direction, block), sorted.
    using Signature = std::vector<std::tuple<std::string, Direction, std::size_t, std::size_t>>;

    [[nodiscard]] auto vertex_signature(const Graph & g, const std::vector<std::size_t> & block_of, VertexIndex v) -> Signature;

    /// Coarsest equitable refinement of the vertex-colour partition, canonically ordered.
    [[nodiscard]] auto degree_partition(const Graph & g) -> DegreePartition;

    [[nodiscard]] auto is_equitable(const Graph & g, const Partition & p) -> bool;

    /**
     * Block i gets vertex colour B<i>; an edge of colour c inside block i
     * becomes c@i, an undirected edge between blocks i < j becomes c@i-j and
     * an arc from block i to block j becomes an undirected edge c@i>j with
     * the same endpoint order. Vertex and edge indices and ids are kept.
     */
    [[nodiscard]] auto normalize_colours(const Graph & g, const Partition & p) -> Graph;
}

#endif
