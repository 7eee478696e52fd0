#ifndef COVERKIT_GUARD_COVERKIT_REDUCTION_HPP
#define COVERKIT_GUARD_COVERKIT_REDUCTION_HPP 1

#include <coverkit/graph.hpp>

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coverkit
{
    /**
     * Dictionary of the colours introduced by the degree-adjusting reduction.
     * Sharing one record between two graphs gives identical structures
     * identical colours.
     */
    struct ReductionRecord
    {
        std::map<std::string, std::string> tree_codes;
        std::map<std::string, std::string> path_patterns;
        std::map<std::string, std::string> semi_patterns;
        std::vector<std::pair<std::string, std::string>> identified;
        std::set<std::string> reserved;
        std::size_t next_id = 0;

        auto reserve_colours(const Graph & g) -> void;
        auto colour_for_tree(const std::string & code) -> std::string;
        auto colour_for_path(const std::string & pattern) -> std::string;
        auto colour_for_semi(const std::string & one_sided, const std::string & symmetric) -> std::string;

        [[nodiscard]] auto to_json() const -> nlohmann::json;
    };

    /// Throws GraphError if g is disconnected or a tree.
    [[nodiscard]] auto degree_adjust(const Graph & g, ReductionRecord & record) -> Graph;
    [[nodiscard]] auto degree_adjust(const Graph & g) -> std::pair<Graph, ReductionRecord>;

    struct ReducedPair
    {
        Graph g;
        Graph h;
        ReductionRecord record;
    };

    [[nodiscard]] auto reduce_pair(const Graph & g, const Graph & h) -> ReducedPair;
}

#endif
