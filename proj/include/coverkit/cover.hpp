#ifndef COVERKIT_GUARD_COVERKIT_COVER_HPP
#define COVERKIT_GUARD_COVERKIT_COVER_HPP 1

#include <coverkit/graph.hpp>

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace coverkit
{
    inline constexpr std::size_t unmapped = std::numeric_limits<std::size_t>::max();

    /// Indices into H, one entry per vertex and edge of G.
    struct CoveringProjection
    {
        std::vector<VertexIndex> vertex_map;
        std::vector<EdgeIndex> edge_map;
    };

    [[nodiscard]] auto projection_to_json(const Graph & g, const Graph & h, const CoveringProjection & f) -> nlohmann::json;

    /// Unknown ids are errors; missing entries are left unmapped.
    [[nodiscard]] auto projection_from_json(const Graph & g, const Graph & h, const nlohmann::json & j) -> CoveringProjection;

    enum class ViolationKind
    {
        Shape,
        Unmapped,
        VertexColour,
        EdgeColour,
        Incidence,
        LocalBijection,
        FibreSize
    };

    auto to_string(ViolationKind kind) -> std::string;

    struct Violation
    {
        ViolationKind kind;
        std::string message;
    };

    struct VerifyResult
    {
        std::vector<Violation> violations;

        [[nodiscard]] auto valid() const -> bool;
        [[nodiscard]] auto to_json() const -> nlohmann::json;
    };

    [[nodiscard]] auto verify_cover(const Graph & g, const Graph & h, const CoveringProjection & f) -> VerifyResult;

    /**
     * Checks, for every vertex and every colour, that neighbours are spread
     * over the fibres exactly as in H, with the in-fibre budget of k loops, n
     * normal edges and t semi-edges against l loops and s semi-edges being
     * t <= s and 2k + n + t = 2l + s.
     */
    [[nodiscard]] auto is_degree_obedient(const Graph & g, const Graph & h, const std::vector<VertexIndex> & fv) -> bool;
}

#endif
