#ifndef COVERKIT_GUARD_COVERKIT_CLASSIFIER_HPP
#define COVERKIT_GUARD_COVERKIT_CLASSIFIER_HPP 1

#include <coverkit/graph.hpp>
#include <coverkit/partition.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coverkit
{
    enum class ShapeFamily
    {
        F,
        FD,
        W,
        WD,
        FF,
        FW,
        WW
    };

    /**
     * Parameters in the order of the family name: F(b,c), FD(c),
     * W(k,m,l,p,q), WD(m,l,m), FF(c), FW(b), WW(b,c). W is stored in the
     * lexicographically larger of its two orientations and WW as (min, max).
     */
    struct SmallShape
    {
        ShapeFamily family;
        std::vector<std::size_t> parameters;

        [[nodiscard]] auto to_string() const -> std::string;
        auto operator==(const SmallShape &) const -> bool = default;
    };

    [[nodiscard]] auto make_shape(ShapeFamily family, std::vector<std::size_t> parameters) -> SmallShape;

    enum class ShapeClass
    {
        Harmless,
        Dangerous,
        Harmful
    };

    auto to_string(ShapeClass c) -> std::string;

    /// One block for a uniblock graph, two for an interblock graph.
    [[nodiscard]] auto recognize_shape(const Graph & g, const std::vector<std::vector<VertexIndex>> & blocks, const std::string & colour)
        -> SmallShape;

    [[nodiscard]] auto classify_shape(const SmallShape & s) -> ShapeClass;

    struct BlockGraphShape
    {
        std::size_t block;
        std::optional<std::size_t> other_block;
        std::string colour;
        SmallShape shape;
        ShapeClass shape_class;

        [[nodiscard]] auto to_json() const -> nlohmann::json;
    };

    /// Every monochromatic block graph of the colour-normalized form of h; blocks must have at most 2 vertices.
    [[nodiscard]] auto block_graph_shapes(const Graph & h, const Partition & p) -> std::vector<BlockGraphShape>;

    enum class VerdictKind
    {
        Polynomial,
        NPCompleteForSimpleInputs,
        Unsupported
    };

    auto to_string(VerdictKind kind) -> std::string;

    struct Verdict
    {
        VerdictKind kind;
        std::string reason;
        std::vector<BlockGraphShape> shapes;
        std::optional<BlockGraphShape> witness;

        [[nodiscard]] auto to_json() const -> nlohmann::json;
    };

    [[nodiscard]] auto verdict(const Graph & h) -> Verdict;
}

#endif
