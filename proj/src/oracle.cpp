#include <coverkit/edge_assignment.hpp>
#include <coverkit/oracle.hpp>
#include <coverkit/partition.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

using namespace coverkit;

auto coverkit::to_string(OracleStatus status) -> string
{
    switch (status) {
    case OracleStatus::Found: return "found";
    case OracleStatus::NotFound: return "not found";
    case OracleStatus::Unknown: return "unknown";
    }
    throw GraphError("unknown oracle status");
}

namespace
{
    struct BudgetExhausted
    {
    };

    using Mask = uint64_t;

    auto bit(size_t y) -> Mask
    {
        return Mask{1} << y;
    }

    auto single_value(Mask m) -> size_t
    {
        return static_cast<size_t>(std::countr_zero(m));
    }

    class Budget
    {
    private:
        uint64_t _limit;
        uint64_t _used = 0;

    public:
        explicit Budget(uint64_t limit) :
            _limit(limit)
        {
        }

        auto spend() -> void
        {
            if (++_used > _limit)
                throw BudgetExhausted{};
        }

        [[nodiscard]] auto used() const -> uint64_t
        {
            return _used;
        }
    };

    // Semi-edge slots of one fibre: each vertex needs exactly (or, when partial, at most)
    // one dart per slot; everything left over goes to the loops.
    class FibreSlots
    {
    private:
        const Graph & g;
        const vector<VertexIndex> & fibre;
        const EdgeClass & c;
        Budget & budget;
        bool partial;
        size_t slots, loops;

        vector<size_t> index;
        vector<vector<EdgeIndex>> semis_at;
        vector<vector<std::pair<EdgeIndex, size_t>>> normals_at;
        vector<EdgeIndex> items;
        vector<vector<char>> filled;
        vector<size_t> loop_degree, unused_semis;
        vector<char> used;
        vector<size_t> slot_of;
        size_t highest_slot = 0;

        auto first_open() const -> optional<std::pair<size_t, size_t>>
        {
            for (size_t v = 0; v < fibre.size(); ++v)
                for (size_t s = 0; s < slots; ++s)
                    if (! filled[v][s])
                        return std::pair{v, s};
            return std::nullopt;
        }

        auto open_slots(size_t v) const -> size_t
        {
            return static_cast<size_t>(std::count(filled[v].begin(), filled[v].end(), 0));
        }

        auto exact_search() -> bool
        {
            budget.spend();
            auto open = first_open();
            if (! open) {
                for (auto n : unused_semis)
                    if (n != 0)
                        return false;
                return true;
            }
            auto [v, s] = *open;
            return exact_options(v, s);
        }

        map<EdgeIndex, size_t> edge_position;

        auto index_of_edge(EdgeIndex e) const -> size_t
        {
            return edge_position.at(e);
        }

        auto exact_options(size_t v, size_t s) -> bool
        {
            for (auto e : semis_at[v]) {
                auto p = index_of_edge(e);
                if (used[p])
                    continue;
                used[p] = 1;
                filled[v][s] = 1;
                --unused_semis[v];
                slot_of[p] = s;
                if (exact_search())
                    return true;
                used[p] = 0;
                filled[v][s] = 0;
                ++unused_semis[v];
                break;
            }

            vector<size_t> tried;
            for (auto [e, w] : normals_at[v]) {
                auto p = index_of_edge(e);
                if (used[p] || filled[w][s] || std::find(tried.begin(), tried.end(), w) != tried.end())
                    continue;
                tried.push_back(w);
                used[p] = 1;
                filled[v][s] = filled[w][s] = 1;
                slot_of[p] = s;
                if (unused_semis[v] <= open_slots(v) && unused_semis[w] <= open_slots(w) && exact_search())
                    return true;
                used[p] = 0;
                filled[v][s] = filled[w][s] = 0;
            }
            return false;
        }

        auto partial_search(size_t i) -> bool
        {
            budget.spend();
            if (i == items.size())
                return true;
            auto p = index_of_edge(items[i]);
            auto & edge = g.edge(items[i]);
            auto limit = std::min(slots, highest_slot + 1);
            if (edge.kind == EdgeKind::SemiEdge) {
                auto v = index[edge.tail];
                for (size_t s = 0; s < limit; ++s) {
                    if (filled[v][s])
                        continue;
                    filled[v][s] = 1;
                    auto old = highest_slot;
                    highest_slot = std::max(highest_slot, s + 1);
                    slot_of[p] = s;
                    if (partial_search(i + 1))
                        return true;
                    highest_slot = old;
                    filled[v][s] = 0;
                }
                return false;
            }

            auto u = index[edge.tail], w = index[edge.head];
            for (size_t s = 0; s < limit; ++s) {
                if (filled[u][s] || filled[w][s])
                    continue;
                filled[u][s] = filled[w][s] = 1;
                auto old = highest_slot;
                highest_slot = std::max(highest_slot, s + 1);
                slot_of[p] = s;
                if (partial_search(i + 1))
                    return true;
                highest_slot = old;
                filled[u][s] = filled[w][s] = 0;
            }
            if (loop_degree[u] + 1 <= 2 * loops && loop_degree[w] + 1 <= 2 * loops) {
                ++loop_degree[u];
                ++loop_degree[w];
                slot_of[p] = slots;
                if (partial_search(i + 1))
                    return true;
                --loop_degree[u];
                --loop_degree[w];
            }
            return false;
        }

    public:
        FibreSlots(const Graph & g, const vector<VertexIndex> & fibre, const EdgeClass & c, Budget & budget, bool partial) :
            g(g), fibre(fibre), c(c), budget(budget), partial(partial), slots(c.h_semis.size()), loops(c.h_loops.size()),
            index(g.vertex_count(), 0), semis_at(fibre.size()), normals_at(fibre.size()), filled(fibre.size(), vector<char>(slots, 0)),
            loop_degree(fibre.size(), 0), unused_semis(fibre.size(), 0), used(c.g_edges.size(), 0),
            slot_of(c.g_edges.size(), static_cast<size_t>(-1))
        {
            for (size_t i = 0; i < fibre.size(); ++i)
                index[fibre[i]] = i;
            for (size_t p = 0; p < c.g_edges.size(); ++p) {
                auto e = c.g_edges[p];
                edge_position.emplace(e, p);
                auto & edge = g.edge(e);
                switch (edge.kind) {
                case EdgeKind::SemiEdge:
                    semis_at[index[edge.tail]].push_back(e);
                    ++unused_semis[index[edge.tail]];
                    items.push_back(e);
                    break;
                case EdgeKind::UndirectedNormal:
                    normals_at[index[edge.tail]].emplace_back(e, index[edge.head]);
                    normals_at[index[edge.head]].emplace_back(e, index[edge.tail]);
                    break;
                case EdgeKind::UndirectedLoop:
                    loop_degree[index[edge.tail]] += 2;
                    slot_of[p] = slots;
                    break;
                default: break;
                }
            }
            for (size_t p = 0; p < c.g_edges.size(); ++p)
                if (g.edge(c.g_edges[p]).kind == EdgeKind::UndirectedNormal)
                    items.push_back(c.g_edges[p]);
        }

        /// Exact: fills edge_map; partial: existence only.
        auto run(vector<EdgeIndex> * edge_map) -> bool
        {
            if (partial) {
                for (auto d : loop_degree)
                    if (d > 2 * loops)
                        return false;
                return partial_search(0);
            }

            for (size_t v = 0; v < fibre.size(); ++v)
                if (unused_semis[v] > slots)
                    return false;
            if (! exact_search())
                return false;

            vector<EdgeIndex> rest;
            for (size_t p = 0; p < c.g_edges.size(); ++p) {
                auto e = c.g_edges[p];
                if (g.edge(e).kind == EdgeKind::SemiEdge || (g.edge(e).kind == EdgeKind::UndirectedNormal && used[p]))
                    (*edge_map)[e] = c.h_semis[slot_of[p]];
                else
                    rest.push_back(e);
            }
            return assign_fibre_loops(g, fibre, rest, c.h_loops, *edge_map);
        }
    };

    auto exact_edges(const Graph & g, const Graph & h, const vector<VertexIndex> & fv, Budget & budget) -> optional<vector<EdgeIndex>>
    {
        auto classes = group_edges(g, h, fv);
        auto fibre_of = fibres(h, fv);
        vector<EdgeIndex> edge_map(g.edge_count(), unmapped);
        for (auto & c : classes) {
            bool ok = true;
            switch (c.type) {
            case EdgeClassType::Cross:
            case EdgeClassType::CrossDirected: ok = assign_cross_class(g, fibre_of, fv, c, edge_map); break;
            case EdgeClassType::FibreDirected: ok = assign_fibre_directed_class(g, fibre_of, c, edge_map); break;
            case EdgeClassType::Fibre:
                if (c.h_semis.empty()) {
                    for (auto e : c.g_edges)
                        if (g.edge(e).kind == EdgeKind::SemiEdge)
                            ok = false;
                    ok = ok && assign_fibre_loops(g, fibre_of[c.x], c.g_edges, c.h_loops, edge_map);
                }
                else
                    ok = FibreSlots(g, fibre_of[c.x], c, budget, false).run(&edge_map);
                break;
            }
            if (! ok)
                return std::nullopt;
        }
        return edge_map;
    }

    auto partial_edges(const Graph & g, const Graph & h, const vector<VertexIndex> & fv, Budget & budget) -> bool
    {
        auto classes = group_edges(g, h, fv);
        auto fibre_of = fibres(h, fv);
        for (auto & c : classes)
            if (c.type == EdgeClassType::Fibre && ! c.g_edges.empty())
                if (! FibreSlots(g, fibre_of[c.x], c, budget, true).run(nullptr))
                    return false;
        return true;
    }

    using Counts = map<std::tuple<string, Direction, VertexIndex>, size_t>;

    auto counts_at(const Graph & g, VertexIndex v, const vector<VertexIndex> & image) -> Counts
    {
        Counts result;
        for (auto e : g.incident(v)) {
            auto & edge = g.edge(e);
            switch (edge.kind) {
            case EdgeKind::UndirectedNormal: ++result[{edge.colour, Direction::Undirected, image[edge.other(v)]}]; break;
            case EdgeKind::SemiEdge: ++result[{edge.colour, Direction::Undirected, image[v]}]; break;
            case EdgeKind::UndirectedLoop: result[{edge.colour, Direction::Undirected, image[v]}] += 2; break;
            case EdgeKind::DirectedNormal:
                if (edge.tail == v)
                    ++result[{edge.colour, Direction::Out, image[edge.head]}];
                else
                    ++result[{edge.colour, Direction::In, image[edge.tail]}];
                break;
            case EdgeKind::DirectedLoop:
                ++result[{edge.colour, Direction::Out, image[v]}];
                ++result[{edge.colour, Direction::In, image[v]}];
                break;
            }
        }
        return result;
    }

    auto self_counts(const Graph & g, VertexIndex v) -> map<std::pair<string, EdgeKind>, size_t>
    {
        map<std::pair<string, EdgeKind>, size_t> result;
        for (auto e : g.incident(v)) {
            auto kind = g.edge(e).kind;
            if (kind == EdgeKind::UndirectedLoop || kind == EdgeKind::SemiEdge || kind == EdgeKind::DirectedLoop)
                ++result[{g.edge(e).colour, kind}];
        }
        return result;
    }

    auto self_counts_fit(const map<std::pair<string, EdgeKind>, size_t> & have, const map<std::pair<string, EdgeKind>, size_t> & room) -> bool
    {
        for (auto & [key, count] : have) {
            auto it = room.find(key);
            if (count > (it == room.end() ? 0 : it->second))
                return false;
        }
        return true;
    }

    struct Link
    {
        VertexIndex w;
        size_t multiplicity;
    };

    struct Group
    {
        size_t colour;
        Direction direction;
        size_t self;
        vector<Link> links;
    };

    class Search
    {
    private:
        const Graph & g;
        const Graph & h;
        const OracleOptions & options;
        Budget budget;
        size_t ng, nh;

        map<string, size_t> colour_ids;
        vector<vector<Group>> groups;
        vector<map<std::pair<size_t, Direction>, vector<size_t>>> need;
        vector<size_t> g_total, h_total;
        vector<vector<VertexIndex>> neighbours;
        vector<vector<VertexIndex>> twin_classes;
        vector<std::pair<size_t, size_t>> twin_position;
        size_t fibre_cap = 0;
        vector<size_t> have, poss;

        struct State
        {
            vector<Mask> dom;
            vector<char> done;
            vector<size_t> fibre_count;
        };

        optional<State> solution;
        optional<vector<EdgeIndex>> solution_edges;

        auto colour_id(const string & colour) -> size_t
        {
            return colour_ids.emplace(colour, colour_ids.size()).first->second;
        }

        auto exact_at(VertexIndex u, VertexIndex x) const -> bool
        {
            return ! options.partial || g_total[u] == h_total[x];
        }

        auto build() -> void
        {
            groups.resize(ng);
            neighbours.resize(ng);
            for (VertexIndex u = 0; u < ng; ++u) {
                map<std::pair<size_t, Direction>, Group> by_key;
                map<std::pair<size_t, Direction>, map<VertexIndex, size_t>> links;
                auto group = [&](const string & colour, Direction d) -> Group & {
                    auto key = std::pair{colour_id(colour), d};
                    auto it = by_key.find(key);
                    if (it == by_key.end())
                        it = by_key.emplace(key, Group{key.first, d, 0, {}}).first;
                    return it->second;
                };
                for (auto e : g.incident(u)) {
                    auto & edge = g.edge(e);
                    switch (edge.kind) {
                    case EdgeKind::UndirectedNormal:
                        group(edge.colour, Direction::Undirected);
                        ++links[{colour_id(edge.colour), Direction::Undirected}][edge.other(u)];
                        break;
                    case EdgeKind::SemiEdge: group(edge.colour, Direction::Undirected).self += 1; break;
                    case EdgeKind::UndirectedLoop: group(edge.colour, Direction::Undirected).self += 2; break;
                    case EdgeKind::DirectedNormal:
                        if (edge.tail == u) {
                            group(edge.colour, Direction::Out);
                            ++links[{colour_id(edge.colour), Direction::Out}][edge.head];
                        }
                        else {
                            group(edge.colour, Direction::In);
                            ++links[{colour_id(edge.colour), Direction::In}][edge.tail];
                        }
                        break;
                    case EdgeKind::DirectedLoop:
                        group(edge.colour, Direction::Out).self += 1;
                        group(edge.colour, Direction::In).self += 1;
                        break;
                    }
                }
                for (auto & [key, group] : by_key) {
                    for (auto & [w, m] : links[key]) {
                        group.links.push_back(Link{w, m});
                        neighbours[u].push_back(w);
                    }
                    groups[u].push_back(std::move(group));
                }
                std::sort(neighbours[u].begin(), neighbours[u].end());
                neighbours[u].erase(std::unique(neighbours[u].begin(), neighbours[u].end()), neighbours[u].end());
                g_total[u] = total_degree(g, u);
            }

            need.resize(nh);
            for (VertexIndex x = 0; x < nh; ++x) {
                auto at = [&](const string & colour, Direction d) -> vector<size_t> & {
                    auto & v = need[x][{colour_id(colour), d}];
                    v.resize(nh, 0);
                    return v;
                };
                for (auto e : h.incident(x)) {
                    auto & edge = h.edge(e);
                    switch (edge.kind) {
                    case EdgeKind::UndirectedNormal: ++at(edge.colour, Direction::Undirected)[edge.other(x)]; break;
                    case EdgeKind::SemiEdge: ++at(edge.colour, Direction::Undirected)[x]; break;
                    case EdgeKind::UndirectedLoop: at(edge.colour, Direction::Undirected)[x] += 2; break;
                    case EdgeKind::DirectedNormal:
                        if (edge.tail == x)
                            ++at(edge.colour, Direction::Out)[edge.head];
                        else
                            ++at(edge.colour, Direction::In)[edge.tail];
                        break;
                    case EdgeKind::DirectedLoop:
                        ++at(edge.colour, Direction::Out)[x];
                        ++at(edge.colour, Direction::In)[x];
                        break;
                    }
                }
                h_total[x] = total_degree(h, x);
            }
        }

        auto compatible(VertexIndex u, VertexIndex x) -> bool
        {
            if (g.vertex(u).colour != h.vertex(x).colour)
                return false;
            if (! self_counts_fit(self_counts(g, u), self_counts(h, x)))
                return false;
            bool exact = exact_at(u, x);
            map<std::pair<size_t, Direction>, size_t> totals;
            for (auto & group : groups[u]) {
                auto & t = totals[{group.colour, group.direction}];
                t += group.self;
                for (auto & link : group.links)
                    t += link.multiplicity;
            }
            for (auto & [key, t] : totals) {
                auto it = need[x].find(key);
                size_t room = 0;
                if (it != need[x].end())
                    for (auto n : it->second)
                        room += n;
                if (t > room || (exact && t != room))
                    return false;
            }
            if (exact)
                for (auto & [key, counts] : need[x])
                    if (! totals.contains(key))
                        for (auto n : counts)
                            if (n != 0)
                                return false;
            return true;
        }

        auto build_twins() -> void
        {
            twin_position.assign(ng, {static_cast<size_t>(-1), 0});
            if (! options.symmetry_breaking)
                return;
            map<std::pair<string, vector<std::tuple<string, int, int, size_t>>>, vector<VertexIndex>> by_signature;
            for (VertexIndex u = 0; u < ng; ++u) {
                if (! options.allowed.empty() && ! options.allowed[u].empty())
                    continue;
                vector<std::tuple<string, int, int, size_t>> signature;
                for (auto e : g.incident(u)) {
                    auto & edge = g.edge(e);
                    size_t other = edge.tail == edge.head ? static_cast<size_t>(-1) : edge.other(u);
                    int direction = edge.kind == EdgeKind::DirectedNormal ? (edge.tail == u ? 1 : 2) : 0;
                    signature.emplace_back(edge.colour, static_cast<int>(edge.kind), direction, other);
                }
                std::sort(signature.begin(), signature.end());
                by_signature[{g.vertex(u).colour, signature}].push_back(u);
            }
            for (auto & [_, members] : by_signature)
                if (members.size() > 1) {
                    for (size_t i = 0; i < members.size(); ++i)
                        twin_position[members[i]] = {twin_classes.size(), i};
                    twin_classes.push_back(members);
                }
        }

        auto restrict(State & s, VertexIndex w, Mask mask, vector<VertexIndex> & queue) -> void
        {
            auto next = s.dom[w] & mask;
            if (next != s.dom[w]) {
                s.dom[w] = next;
                queue.push_back(w);
            }
        }

        auto check(State & s, VertexIndex u, vector<VertexIndex> & queue) -> bool
        {
            auto x = single_value(s.dom[u]);
            bool exact = exact_at(u, x);
            for (auto & group : groups[u]) {
                auto it = need[x].find({group.colour, group.direction});
                if (it == need[x].end())
                    return false;
                auto & wanted = it->second;
                std::fill(have.begin(), have.end(), 0);
                std::fill(poss.begin(), poss.end(), 0);
                have[x] += group.self;
                for (auto & link : group.links) {
                    if (s.done[link.w])
                        have[single_value(s.dom[link.w])] += link.multiplicity;
                    else
                        for (auto m = s.dom[link.w]; m; m &= m - 1)
                            poss[single_value(m)] += link.multiplicity;
                }

                Mask forced = 0;
                for (size_t y = 0; y < nh; ++y) {
                    if (have[y] > wanted[y])
                        return false;
                    if (exact) {
                        if (have[y] + poss[y] < wanted[y])
                            return false;
                        if (have[y] + poss[y] == wanted[y] && wanted[y] > have[y])
                            forced |= bit(y);
                    }
                }

                for (auto & link : group.links) {
                    if (s.done[link.w])
                        continue;
                    Mask keep = 0;
                    for (auto m = s.dom[link.w]; m; m &= m - 1) {
                        auto y = single_value(m);
                        if (have[y] + link.multiplicity <= wanted[y])
                            keep |= bit(y);
                    }
                    if (s.dom[link.w] & forced)
                        keep &= forced & s.dom[link.w];
                    restrict(s, link.w, keep, queue);
                }
            }
            return true;
        }

        auto propagate(State & s, vector<VertexIndex> queue) -> bool
        {
            while (! queue.empty()) {
                auto v = queue.back();
                queue.pop_back();
                if (s.dom[v] == 0)
                    return false;

                if (! s.done[v] && std::has_single_bit(s.dom[v])) {
                    s.done[v] = 1;
                    auto x = single_value(s.dom[v]);
                    if (fibre_cap != 0) {
                        if (++s.fibre_count[x] > fibre_cap)
                            return false;
                        if (s.fibre_count[x] == fibre_cap)
                            for (VertexIndex w = 0; w < ng; ++w)
                                if (! s.done[w])
                                    restrict(s, w, ~bit(x), queue);
                    }
                    if (auto [cls, pos] = twin_position[v]; cls != static_cast<size_t>(-1)) {
                        auto & members = twin_classes[cls];
                        for (size_t j = 0; j < members.size(); ++j) {
                            if (j == pos)
                                continue;
                            auto w = members[j];
                            Mask below = bit(x) - 1, above = ~(bit(x) | below);
                            Mask keep = j < pos ? (below | bit(x)) : (above | bit(x));
                            if (s.done[w]) {
                                if (! (s.dom[w] & keep))
                                    return false;
                            }
                            else
                                restrict(s, w, keep, queue);
                        }
                    }
                    if (! check(s, v, queue))
                        return false;
                }

                for (auto a : neighbours[v])
                    if (a != v && s.done[a] && ! check(s, a, queue))
                        return false;
            }
            return true;
        }

        auto choose(const State & s) const -> optional<VertexIndex>
        {
            optional<VertexIndex> best;
            std::tuple<int, size_t, size_t> best_score{0, 0, 0};
            for (VertexIndex v = 0; v < ng; ++v) {
                if (s.done[v])
                    continue;
                size_t assigned = 0;
                for (auto & group : groups[v])
                    for (auto & link : group.links)
                        if (s.done[link.w])
                            ++assigned;
                std::tuple<int, size_t, size_t> score{-std::popcount(s.dom[v]), assigned, g_total[v]};
                if (! best || score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            return best;
        }

        auto vertex_map(const State & s) const -> vector<VertexIndex>
        {
            vector<VertexIndex> result(ng);
            for (VertexIndex v = 0; v < ng; ++v)
                result[v] = single_value(s.dom[v]);
            return result;
        }

        auto search(const State & s) -> bool
        {
            budget.spend();
            auto v = choose(s);
            if (! v) {
                auto fv = vertex_map(s);
                if (options.partial) {
                    if (! partial_edges(g, h, fv, budget))
                        return false;
                }
                else {
                    auto edges = exact_edges(g, h, fv, budget);
                    if (! edges)
                        return false;
                    solution_edges = std::move(edges);
                }
                solution = s;
                return true;
            }

            for (auto m = s.dom[*v]; m; m &= m - 1) {
                State t = s;
                t.dom[*v] = bit(single_value(m));
                if (propagate(t, {*v}) && search(t))
                    return true;
            }
            return false;
        }

        auto trivially_impossible() -> bool
        {
            if (options.partial)
                return nh == 0 && ng > 0;
            if (nh == 0)
                return ng > 0;
            if (ng == 0 || ng % nh != 0)
                return true;
            return degree_partition(g).matrix != degree_partition(h).matrix;
        }

    public:
        Search(const Graph & g, const Graph & h, const OracleOptions & options) :
            g(g), h(h), options(options), budget(options.budget), ng(g.vertex_count()), nh(h.vertex_count()), g_total(ng, 0),
            h_total(nh, 0), have(nh, 0), poss(nh, 0)
        {
            if (nh > 64)
                throw GraphError("the oracle supports at most 64 target vertices");
            if (! options.allowed.empty() && options.allowed.size() != ng)
                throw GraphError("allowed-image list has the wrong length");
        }

        auto run() -> OracleResult
        {
            OracleResult result;
            try {
                if (trivially_impossible()) {
                    result.status = OracleStatus::NotFound;
                    return result;
                }
                if (nh == 0 || ng == 0) {
                    result.status = OracleStatus::Found;
                    result.projection = CoveringProjection{{}, {}};
                    return result;
                }

                build();
                build_twins();

                State start{vector<Mask>(ng, 0), vector<char>(ng, 0), vector<size_t>(nh, 0)};
                optional<DegreePartition> gp, hp;
                if (! options.partial) {
                    gp = degree_partition(g);
                    hp = degree_partition(h);
                    fibre_cap = ng / nh;
                }
                for (VertexIndex u = 0; u < ng; ++u)
                    for (VertexIndex x = 0; x < nh; ++x) {
                        if (gp && gp->partition.block_of[u] != hp->partition.block_of[x])
                            continue;
                        if (! options.allowed.empty() && ! options.allowed[u].empty()
                            && std::find(options.allowed[u].begin(), options.allowed[u].end(), x) == options.allowed[u].end())
                            continue;
                        if (compatible(u, x))
                            start.dom[u] |= bit(x);
                    }

                vector<VertexIndex> queue(ng);
                for (VertexIndex u = 0; u < ng; ++u)
                    queue[u] = u;
                if (propagate(start, queue) && search(start)) {
                    result.status = OracleStatus::Found;
                    result.projection = CoveringProjection{vertex_map(*solution), {}};
                    if (solution_edges)
                        result.projection->edge_map = *solution_edges;
                }
                else
                    result.status = OracleStatus::NotFound;
            }
            catch (const BudgetExhausted &) {
                result.status = OracleStatus::Unknown;
            }
            result.nodes = budget.used();

            if (result.status == OracleStatus::Found && ! options.partial && ! verify_cover(g, h, *result.projection).valid())
                throw GraphError("internal error: oracle produced an invalid covering projection");
            return result;
        }
    };
}

auto coverkit::oracle_search(const Graph & g, const Graph & h, const OracleOptions & options) -> OracleResult
{
    return Search(g, h, options).run();
}

auto coverkit::oracle_cover(const Graph & g, const Graph & h, uint64_t budget) -> OracleResult
{
    OracleOptions options;
    options.budget = budget;
    return oracle_search(g, h, options);
}

auto coverkit::complete_edges_exhaustively(const Graph & g, const Graph & h, const vector<VertexIndex> & fv, uint64_t limit) -> OracleResult
{
    OracleResult result;
    Budget budget(limit);
    try {
        if (! is_degree_obedient(g, h, fv))
            result.status = OracleStatus::NotFound;
        else if (auto edges = exact_edges(g, h, fv, budget)) {
            result.status = OracleStatus::Found;
            result.projection = CoveringProjection{fv, *edges};
        }
        else
            result.status = OracleStatus::NotFound;
    }
    catch (const BudgetExhausted &) {
        result.status = OracleStatus::Unknown;
    }
    result.nodes = budget.used();
    return result;
}

auto coverkit::partial_cover_exists(const Graph & g, const Graph & h, const vector<VertexIndex> & fv) -> bool
{
    if (fv.size() != g.vertex_count())
        return false;
    vector<VertexIndex> identity(h.vertex_count());
    for (VertexIndex x = 0; x < h.vertex_count(); ++x)
        identity[x] = x;

    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
        auto x = fv[u];
        if (x >= h.vertex_count() || g.vertex(u).colour != h.vertex(x).colour)
            return false;
        if (! self_counts_fit(self_counts(g, u), self_counts(h, x)))
            return false;
        auto have = counts_at(g, u, fv);
        auto room = counts_at(h, x, identity);
        bool exact = total_degree(g, u) == total_degree(h, x);
        for (auto & [key, count] : have) {
            auto it = room.find(key);
            if (count > (it == room.end() ? 0 : it->second))
                return false;
        }
        if (exact && have != room)
            return false;
    }

    Budget budget(default_oracle_budget);
    return partial_edges(g, h, fv, budget);
}
