#ifndef COVERKIT_GUARD_COVERKIT_FORMULA_HPP
#define COVERKIT_GUARD_COVERKIT_FORMULA_HPP 1

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coverkit
{
    /**
     * An all-positive c-in-2c formula: every clause lists 2c distinct
     * variables (as indices into variables) and is satisfied when exactly c
     * of them are true.
     */
    struct Formula
    {
        std::size_t c = 2;
        std::vector<std::string> variables;
        std::vector<std::vector<std::size_t>> clauses;

        /// Throws std::invalid_argument if a clause has the wrong size or repeats a variable.
        auto validate() const -> void;

        [[nodiscard]] auto occurrences() const -> std::vector<std::size_t>;

        /// Clause indices containing the variable, in increasing order.
        [[nodiscard]] auto clauses_of(std::size_t variable) const -> std::vector<std::size_t>;

        /// True if every variable occurs in exactly the given number of clauses.
        [[nodiscard]] auto has_occurrences(std::size_t count) const -> bool;

        [[nodiscard]] auto satisfied_by(const std::vector<bool> & assignment) const -> bool;

        [[nodiscard]] auto to_json() const -> nlohmann::json;
    };

    /// Reads {"c": 2, "clauses": [["x1", ...], ...]}; variables are numbered in order of appearance.
    [[nodiscard]] auto formula_from_json(const nlohmann::json & j) -> Formula;

    inline constexpr std::size_t brute_force_variable_limit = 24;

    /// Exhaustive search; throws std::invalid_argument above the variable limit.
    [[nodiscard]] auto brute_force_formula(const Formula & f) -> std::optional<std::vector<bool>>;

    /**
     * A random formula with the given number of clauses in which every
     * variable occurs in exactly `occurrences` clauses. Needs
     * occurrences <= clause_count and 2c * clause_count divisible by
     * occurrences.
     */
    [[nodiscard]] auto random_formula(std::size_t c, std::size_t clause_count, std::size_t occurrences, std::uint64_t seed) -> Formula;
}

#endif
