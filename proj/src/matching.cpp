#include <coverkit/matching.hpp>

#include <numeric>

using std::optional;
using std::size_t;
using std::vector;

using namespace coverkit;

namespace
{
    constexpr size_t none = static_cast<size_t>(-1);

    // Edmonds' blossom algorithm, searching one augmenting path per exposed root.
    class Blossom
    {
    private:
        size_t n;
        vector<vector<std::pair<size_t, size_t>>> adjacent;
        vector<size_t> mate, mate_edge, parent, parent_edge, base;
        vector<bool> used, in_blossom;
        vector<size_t> queue;

        auto lowest_common_ancestor(size_t a, size_t b) -> size_t
        {
            vector<bool> seen(n, false);
            while (true) {
                a = base[a];
                seen[a] = true;
                if (mate[a] == none)
                    break;
                a = parent[mate[a]];
            }
            while (true) {
                b = base[b];
                if (seen[b])
                    return b;
                b = parent[mate[b]];
            }
        }

        auto mark_path(size_t v, size_t b, size_t child, size_t child_edge) -> void
        {
            while (base[v] != b) {
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = true;
                parent[v] = child;
                parent_edge[v] = child_edge;
                child = mate[v];
                child_edge = parent_edge[mate[v]];
                v = parent[mate[v]];
            }
        }

        auto find_path(size_t root) -> size_t
        {
            used.assign(n, false);
            parent.assign(n, none);
            parent_edge.assign(n, none);
            std::iota(base.begin(), base.end(), 0);
            queue.clear();
            queue.push_back(root);
            used[root] = true;

            for (size_t head = 0; head < queue.size(); ++head) {
                auto v = queue[head];
                for (auto [to, e] : adjacent[v]) {
                    if (base[v] == base[to] || mate[v] == to)
                        continue;
                    if (to == root || (mate[to] != none && parent[mate[to]] != none)) {
                        auto current = lowest_common_ancestor(v, to);
                        in_blossom.assign(n, false);
                        mark_path(v, current, to, e);
                        mark_path(to, current, v, e);
                        for (size_t i = 0; i < n; ++i)
                            if (in_blossom[base[i]]) {
                                base[i] = current;
                                if (! used[i]) {
                                    used[i] = true;
                                    queue.push_back(i);
                                }
                            }
                    }
                    else if (parent[to] == none) {
                        parent[to] = v;
                        parent_edge[to] = e;
                        if (mate[to] == none)
                            return to;
                        used[mate[to]] = true;
                        queue.push_back(mate[to]);
                    }
                }
            }
            return none;
        }

    public:
        Blossom(size_t n, const vector<IndexPair> & edges) :
            n(n), adjacent(n), mate(n, none), mate_edge(n, none), base(n)
        {
            for (size_t e = 0; e < edges.size(); ++e) {
                auto [u, v] = edges[e];
                if (u == v)
                    continue;
                adjacent[u].emplace_back(v, e);
                adjacent[v].emplace_back(u, e);
            }
        }

        auto run() -> vector<size_t>
        {
            // greedy start
            for (size_t v = 0; v < n; ++v)
                if (mate[v] == none)
                    for (auto [to, e] : adjacent[v])
                        if (mate[to] == none) {
                            mate[v] = to;
                            mate[to] = v;
                            mate_edge[v] = mate_edge[to] = e;
                            break;
                        }

            for (size_t v = 0; v < n; ++v)
                if (mate[v] == none) {
                    auto end = find_path(v);
                    while (end != none) {
                        auto p = parent[end], pe = parent_edge[end], next = mate[p];
                        mate[end] = p;
                        mate[p] = end;
                        mate_edge[end] = mate_edge[p] = pe;
                        end = next;
                    }
                }

            vector<size_t> result;
            for (size_t v = 0; v < n; ++v)
                if (mate[v] != none && v < mate[v])
                    result.push_back(mate_edge[v]);
            return result;
        }
    };
}

auto coverkit::maximum_matching(size_t n, const vector<IndexPair> & edges) -> vector<size_t>
{
    for (auto [u, v] : edges)
        if (u >= n || v >= n)
            throw GraphError("matching edge endpoint out of range");
    return Blossom(n, edges).run();
}

auto coverkit::perfect_matching(size_t n, const vector<IndexPair> & edges) -> optional<vector<size_t>>
{
    if (n % 2 != 0)
        return std::nullopt;
    auto result = maximum_matching(n, edges);
    if (2 * result.size() != n)
        return std::nullopt;
    return result;
}

auto coverkit::general_perfect_matching(const Graph & g) -> optional<vector<EdgeIndex>>
{
    vector<IndexPair> edges;
    vector<EdgeIndex> ids;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        auto & edge = g.edge(e);
        if (is_directed(edge.kind))
            throw GraphError("perfect matching needs an undirected graph");
        if (edge.kind == EdgeKind::UndirectedNormal) {
            edges.emplace_back(edge.tail, edge.head);
            ids.push_back(e);
        }
    }
    auto found = perfect_matching(g.vertex_count(), edges);
    if (! found)
        return std::nullopt;
    vector<EdgeIndex> result;
    for (auto i : *found)
        result.push_back(ids[i]);
    return result;
}
