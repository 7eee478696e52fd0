#ifndef COVERKIT_GUARD_COVERKIT_ORACLE_HPP
#define COVERKIT_GUARD_COVERKIT_ORACLE_HPP 1

#include <coverkit/cover.hpp>
#include <coverkit/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coverkit
{
    inline constexpr std::uint64_t default_oracle_budget = 50'000'000;

    enum class OracleStatus
    {
        Found,
        NotFound,
        Unknown
    };

    auto to_string(OracleStatus status) -> std::string;

    struct OracleOptions
    {
        std::uint64_t budget = default_oracle_budget;

        /**
         * Partial mode asks for a locally injective homomorphism that is
         * locally bijective at every vertex whose total degree equals that
         * of its image; no fibre-size or degree-partition constraints apply.
         */
        bool partial = false;

        /// Per G-vertex list of permitted images; empty lists mean no restriction.
        std::vector<std::vector<VertexIndex>> allowed;

        bool symmetry_breaking = true;
    };

    struct OracleResult
    {
        OracleStatus status = OracleStatus::Unknown;

        /// In partial mode only the vertex map is filled in.
        std::optional<CoveringProjection> projection;

        std::uint64_t nodes = 0;
    };

    [[nodiscard]] auto oracle_cover(const Graph & g, const Graph & h, std::uint64_t budget = default_oracle_budget) -> OracleResult;

    [[nodiscard]] auto oracle_search(const Graph & g, const Graph & h, const OracleOptions & options) -> OracleResult;

    /// Whether a complete vertex map extends to a partial covering projection.
    [[nodiscard]] auto partial_cover_exists(const Graph & g, const Graph & h, const std::vector<VertexIndex> & fv) -> bool;

    /**
     * Edge phase of the oracle: searches for an edge map completing fv to a
     * covering projection. Unknown only if the budget runs out.
     */
    [[nodiscard]] auto complete_edges_exhaustively(const Graph & g, const Graph & h, const std::vector<VertexIndex> & fv,
        std::uint64_t budget = default_oracle_budget) -> OracleResult;
}

#endif
