#ifndef COVERKIT_GUARD_COVERKIT_TWO_SAT_HPP
#define COVERKIT_GUARD_COVERKIT_TWO_SAT_HPP 1

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace coverkit
{
    struct Literal
    {
        std::size_t variable;
        bool positive = true;

        [[nodiscard]] auto operator!() const -> Literal;
        auto operator==(const Literal &) const -> bool = default;
    };

    /// Clauses are disjunctions of two literals; units are stored apart.
    struct TwoSatInstance
    {
        std::size_t variable_count = 0;
        std::vector<std::pair<Literal, Literal>> clauses;
        std::vector<Literal> units;

        auto add_variable() -> std::size_t;
        auto add_clause(Literal a, Literal b) -> void;
        auto add_unit(Literal a) -> void;
        auto add_equivalence(std::size_t x, std::size_t y) -> void;
        auto add_antivalence(std::size_t x, std::size_t y) -> void;
    };

    [[nodiscard]] auto solve_2sat(const TwoSatInstance & instance) -> std::optional<std::vector<bool>>;

    [[nodiscard]] auto satisfies(const TwoSatInstance & instance, const std::vector<bool> & assignment) -> bool;
}

#endif
