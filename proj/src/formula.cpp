#include <coverkit/formula.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

auto Formula::validate() const -> void
{
    if (c == 0)
        throw std::invalid_argument("a formula needs c >= 1");
    for (size_t i = 0; i < clauses.size(); ++i) {
        auto & clause = clauses[i];
        if (clause.size() != 2 * c)
            throw std::invalid_argument("clause " + std::to_string(i + 1) + " has " + std::to_string(clause.size()) + " variables, expected "
                + std::to_string(2 * c));
        std::set<size_t> seen;
        for (auto x : clause) {
            if (x >= variables.size())
                throw std::invalid_argument("clause " + std::to_string(i + 1) + " refers to an unknown variable");
            if (! seen.insert(x).second)
                throw std::invalid_argument("clause " + std::to_string(i + 1) + " repeats variable '" + variables[x] + "'");
        }
    }
}

auto Formula::occurrences() const -> vector<size_t>
{
    vector<size_t> result(variables.size(), 0);
    for (auto & clause : clauses)
        for (auto x : clause)
            ++result.at(x);
    return result;
}

auto Formula::clauses_of(size_t variable) const -> vector<size_t>
{
    vector<size_t> result;
    for (size_t s = 0; s < clauses.size(); ++s)
        if (std::ranges::find(clauses[s], variable) != clauses[s].end())
            result.push_back(s);
    return result;
}

auto Formula::has_occurrences(size_t count) const -> bool
{
    return std::ranges::all_of(occurrences(), [&](size_t n) { return n == count; });
}

auto Formula::satisfied_by(const vector<bool> & assignment) const -> bool
{
    for (auto & clause : clauses) {
        size_t trues = 0;
        for (auto x : clause)
            trues += assignment.at(x) ? 1 : 0;
        if (trues != c)
            return false;
    }
    return true;
}

auto Formula::to_json() const -> nlohmann::json
{
    auto list = nlohmann::json::array();
    for (auto & clause : clauses) {
        auto names = nlohmann::json::array();
        for (auto x : clause)
            names.push_back(variables[x]);
        list.push_back(names);
    }
    return nlohmann::json{{"c", c}, {"clauses", list}};
}

auto coverkit::formula_from_json(const nlohmann::json & j) -> Formula
{
    Formula f;
    f.c = j.at("c").get<size_t>();
    std::map<string, size_t> index;
    for (auto & clause : j.at("clauses")) {
        vector<size_t> indices;
        for (auto & name : clause) {
            auto text = name.get<string>();
            auto [it, fresh] = index.emplace(text, f.variables.size());
            if (fresh)
                f.variables.push_back(text);
            indices.push_back(it->second);
        }
        f.clauses.push_back(std::move(indices));
    }
    f.validate();
    return f;
}

auto coverkit::brute_force_formula(const Formula & f) -> std::optional<vector<bool>>
{
    f.validate();
    auto n = f.variables.size();
    if (n > brute_force_variable_limit)
        throw std::invalid_argument("brute force is limited to " + std::to_string(brute_force_variable_limit) + " variables");

    vector<std::uint64_t> masks;
    for (auto & clause : f.clauses) {
        std::uint64_t mask = 0;
        for (auto x : clause)
            mask |= std::uint64_t{1} << x;
        masks.push_back(mask);
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool ok = true;
        for (auto mask : masks)
            if (static_cast<size_t>(std::popcount(bits & mask)) != f.c) {
                ok = false;
                break;
            }
        if (! ok)
            continue;
        vector<bool> result(n);
        for (size_t x = 0; x < n; ++x)
            result[x] = (bits >> x) & 1;
        return result;
    }
    return std::nullopt;
}

auto coverkit::random_formula(size_t c, size_t clause_count, size_t occurrences, std::uint64_t seed) -> Formula
{
    auto width = 2 * c;
    if (c == 0 || occurrences == 0 || occurrences > clause_count || (width * clause_count) % occurrences != 0)
        throw std::invalid_argument("no formula with these clause and occurrence counts");
    auto variable_count = width * clause_count / occurrences;
    if (width > variable_count)
        throw std::invalid_argument("too few variables for distinct clause members");

    std::mt19937_64 rng(seed);
    // slot list of the occurrence design, shuffled until no clause repeats a variable
    vector<size_t> slots;
    for (size_t x = 0; x < variable_count; ++x)
        for (size_t i = 0; i < occurrences; ++i)
            slots.push_back(x);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::ranges::shuffle(slots, rng);
        Formula f;
        f.c = c;
        for (size_t x = 0; x < variable_count; ++x)
            f.variables.push_back("x" + std::to_string(x + 1));
        bool ok = true;
        for (size_t s = 0; s < clause_count && ok; ++s) {
            vector<size_t> clause(slots.begin() + s * width, slots.begin() + (s + 1) * width);
            std::ranges::sort(clause);
            ok = std::ranges::adjacent_find(clause) == clause.end();
            f.clauses.push_back(std::move(clause));
        }
        if (ok)
            return f;
    }
    throw std::runtime_error("could not sample a formula with distinct clause members");
}
