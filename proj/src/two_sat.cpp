#include <coverkit/two_sat.hpp>

#include <stdexcept>

using std::optional;
using std::size_t;
using std::vector;

using namespace coverkit;

auto Literal::operator!() const -> Literal
{
    return Literal{variable, ! positive};
}

auto TwoSatInstance::add_variable() -> size_t
{
    return variable_count++;
}

auto TwoSatInstance::add_clause(Literal a, Literal b) -> void
{
    if (a.variable >= variable_count || b.variable >= variable_count)
        throw std::out_of_range("2-SAT literal refers to an unknown variable");
    clauses.emplace_back(a, b);
}

auto TwoSatInstance::add_unit(Literal a) -> void
{
    if (a.variable >= variable_count)
        throw std::out_of_range("2-SAT literal refers to an unknown variable");
    units.push_back(a);
}

auto TwoSatInstance::add_equivalence(size_t x, size_t y) -> void
{
    add_clause(Literal{x, false}, Literal{y, true});
    add_clause(Literal{x, true}, Literal{y, false});
}

auto TwoSatInstance::add_antivalence(size_t x, size_t y) -> void
{
    add_clause(Literal{x, true}, Literal{y, true});
    add_clause(Literal{x, false}, Literal{y, false});
}

namespace
{
    auto node(Literal a) -> size_t
    {
        return 2 * a.variable + (a.positive ? 0 : 1);
    }
}

auto coverkit::solve_2sat(const TwoSatInstance & instance) -> optional<vector<bool>>
{
    auto n = 2 * instance.variable_count;
    vector<vector<size_t>> forward(n), backward(n);
    auto implies = [&](Literal a, Literal b) {
        forward[node(a)].push_back(node(b));
        backward[node(b)].push_back(node(a));
    };
    for (auto & [a, b] : instance.clauses) {
        implies(! a, b);
        implies(! b, a);
    }
    for (auto & a : instance.units)
        implies(! a, a);

    // Kosaraju, iteratively
    vector<size_t> order;
    vector<bool> seen(n, false);
    for (size_t start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        vector<std::pair<size_t, size_t>> stack{{start, 0}};
        seen[start] = true;
        while (! stack.empty()) {
            auto & [v, i] = stack.back();
            if (i < forward[v].size()) {
                auto w = forward[v][i++];
                if (! seen[w]) {
                    seen[w] = true;
                    stack.emplace_back(w, 0);
                }
            }
            else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }

    constexpr size_t unset = static_cast<size_t>(-1);
    vector<size_t> component(n, unset);
    size_t count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (component[*it] != unset)
            continue;
        vector<size_t> stack{*it};
        component[*it] = count;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : backward[v])
                if (component[w] == unset) {
                    component[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }

    // components are numbered in topological order of the implication graph
    vector<bool> result(instance.variable_count);
    for (size_t x = 0; x < instance.variable_count; ++x) {
        auto pos = component[2 * x], neg = component[2 * x + 1];
        if (pos == neg)
            return std::nullopt;
        result[x] = pos > neg;
    }
    return result;
}

auto coverkit::satisfies(const TwoSatInstance & instance, const vector<bool> & assignment) -> bool
{
    auto value = [&](Literal a) { return assignment.at(a.variable) == a.positive; };
    for (auto & [a, b] : instance.clauses)
        if (! value(a) && ! value(b))
            return false;
    for (auto & a : instance.units)
        if (! value(a))
            return false;
    return true;
}
