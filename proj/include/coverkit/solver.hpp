#ifndef COVERKIT_GUARD_COVERKIT_SOLVER_HPP
#define COVERKIT_GUARD_COVERKIT_SOLVER_HPP 1

#include <coverkit/classifier.hpp>
#include <coverkit/cover.hpp>
#include <coverkit/graph.hpp>
#include <coverkit/partition.hpp>
#include <coverkit/two_sat.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverkit
{
    /// Raised when the solver reaches a state its own checks should have excluded.
    class SolverInternalError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    struct SubcaseRecord
    {
        std::size_t block;
        std::optional<std::size_t> other_block;
        std::string colour;
        std::string subcase;
        std::string shape;
    };

    struct SolveTrace
    {
        bool matrices_equal = false;
        std::vector<SubcaseRecord> subcases;
        /// Normalized colour to the G-edges that map onto the single semi-edge of their fibre.
        std::map<std::string, std::vector<EdgeIndex>> matchings;
        std::vector<std::pair<VertexIndex, bool>> units;
        /// G-vertex and its truth value; true means the first vertex of its doublet.
        std::vector<std::pair<VertexIndex, bool>> assignment;
        std::vector<std::string> completion_log;
        std::string failure;

        [[nodiscard]] auto to_json(const Graph & g) const -> nlohmann::json;
    };

    /**
     * Both graphs colour-normalized by their degree partitions, which have
     * equal refinement matrices, so block i of G lies over block i of H.
     */
    struct SolverContext
    {
        Graph g, h;
        DegreePartition gp, hp;
        std::vector<BlockGraphShape> shapes;
        /// Variable of each G-vertex in a doublet block, unmapped otherwise.
        std::vector<std::size_t> variable_of;
        std::vector<VertexIndex> vertex_of_variable;

        [[nodiscard]] auto doublet(std::size_t block) const -> bool;
    };

    enum class SolveStatus
    {
        Covers,
        DoesNotCover,
        Refused
    };

    auto to_string(SolveStatus status) -> std::string;

    struct SolveResult
    {
        SolveStatus status;
        std::optional<CoveringProjection> projection;
        SolveTrace trace;
        std::string reason;
    };

    /// Empty if h is a valid solver target, otherwise the reason for refusing it.
    [[nodiscard]] auto solver_refusal(const Graph & h) -> std::string;

    [[nodiscard]] auto solve_cover(const Graph & g, const Graph & h) -> SolveResult;

    /// Builds the context and records one subcase per block graph; nullopt if the matrices differ.
    [[nodiscard]] auto prepare_context(const Graph & g, const Graph & h, SolveTrace & trace) -> std::optional<SolverContext>;

    [[nodiscard]] auto check_singletons(const SolverContext & ctx, SolveTrace & trace) -> bool;

    /// Adds the unit clauses forced by the doublets to the instance.
    [[nodiscard]] auto preprocess_doublets(const SolverContext & ctx, TwoSatInstance & instance, SolveTrace & trace) -> bool;

    auto build_2sat(const SolverContext & ctx, TwoSatInstance & instance) -> void;

    /// Vertex map of G into H read off a satisfying assignment.
    [[nodiscard]] auto vertex_map_from_assignment(const SolverContext & ctx, const std::vector<bool> & assignment) -> std::vector<VertexIndex>;

    /**
     * Extends a degree-obedient vertex map to a covering projection, reusing
     * the matchings recorded in the trace where they apply. g and h may be
     * the original or the colour-normalized graphs. Throws
     * SolverInternalError if a fibre graph is not regular.
     */
    [[nodiscard]] auto complete_edge_mapping(const Graph & g, const Graph & h, const std::vector<VertexIndex> & fv, SolveTrace & trace)
        -> CoveringProjection;
}

#endif
