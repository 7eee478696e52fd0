#include <coverkit/factorization.hpp>

using std::size_t;
using std::vector;

using namespace coverkit;

namespace
{
    constexpr size_t none = static_cast<size_t>(-1);

    class BipartiteMatcher
    {
    private:
        const vector<vector<std::pair<size_t, size_t>>> & adjacent;
        const vector<bool> & removed;
        vector<size_t> right_mate, right_edge;
        vector<bool> visited;

        auto augment(size_t left) -> bool
        {
            for (auto [right, e] : adjacent[left]) {
                if (removed[e] || visited[right])
                    continue;
                visited[right] = true;
                if (right_mate[right] == none || augment(right_mate[right])) {
                    right_mate[right] = left;
                    right_edge[right] = e;
                    return true;
                }
            }
            return false;
        }

    public:
        BipartiteMatcher(const vector<vector<std::pair<size_t, size_t>>> & adjacent, const vector<bool> & removed) :
            adjacent(adjacent), removed(removed)
        {
        }

        auto perfect(size_t n) -> vector<size_t>
        {
            right_mate.assign(n, none);
            right_edge.assign(n, none);
            for (size_t left = 0; left < n; ++left) {
                visited.assign(n, false);
                if (! augment(left))
                    throw GraphError("regular bipartite graph without a perfect matching");
            }
            return right_edge;
        }
    };
}

auto coverkit::split_regular_bipartite(size_t n, const vector<IndexPair> & edges, size_t k) -> vector<vector<size_t>>
{
    vector<size_t> left_degree(n, 0), right_degree(n, 0);
    vector<vector<std::pair<size_t, size_t>>> adjacent(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [l, r] = edges[e];
        if (l >= n || r >= n)
            throw GraphError("bipartite edge endpoint out of range");
        ++left_degree[l];
        ++right_degree[r];
        adjacent[l].emplace_back(r, e);
    }
    for (size_t v = 0; v < n; ++v)
        if (left_degree[v] != k || right_degree[v] != k)
            throw GraphError("bipartite graph is not " + std::to_string(k) + "-regular");

    vector<bool> removed(edges.size(), false);
    vector<vector<size_t>> result;
    for (size_t round = 0; round < k; ++round) {
        auto matching = BipartiteMatcher(adjacent, removed).perfect(n);
        for (auto e : matching)
            removed[e] = true;
        result.push_back(std::move(matching));
    }
    return result;
}

auto coverkit::split_two_factors(size_t n, const vector<IndexPair> & edges, size_t k) -> vector<vector<size_t>>
{
    vector<size_t> deg(n, 0);
    vector<vector<size_t>> incident(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (u >= n || v >= n)
            throw GraphError("edge endpoint out of range");
        deg[u] += 1;
        deg[v] += 1;
        incident[u].push_back(e);
        if (u != v)
            incident[v].push_back(e);
    }
    for (size_t v = 0; v < n; ++v)
        if (deg[v] != 2 * k)
            throw GraphError("graph is not " + std::to_string(2 * k) + "-regular");

    // orient closed walks so every vertex has in-degree = out-degree = k
    vector<IndexPair> arcs(edges.size());
    vector<bool> used(edges.size(), false);
    vector<size_t> position(n, 0);
    for (size_t start = 0; start < n; ++start) {
        while (true) {
            auto & pos = position[start];
            while (pos < incident[start].size() && used[incident[start][pos]])
                ++pos;
            if (pos == incident[start].size())
                break;
            auto current = start;
            do {
                auto & p = position[current];
                while (p < incident[current].size() && used[incident[current][p]])
                    ++p;
                if (p == incident[current].size())
                    throw GraphError("closed walk got stuck, degrees are not even");
                auto e = incident[current][p];
                used[e] = true;
                auto next = edges[e].first == current ? edges[e].second : edges[e].first;
                arcs[e] = {current, next};
                current = next;
            } while (current != start);
        }
    }
    return split_regular_bipartite(n, arcs, k);
}

auto coverkit::split_directed_factors(size_t n, const vector<IndexPair> & arcs, size_t k) -> vector<vector<size_t>>
{
    return split_regular_bipartite(n, arcs, k);
}

namespace
{
    auto to_edge_ids(const vector<vector<size_t>> & factors, const vector<EdgeIndex> & ids) -> vector<vector<EdgeIndex>>
    {
        vector<vector<EdgeIndex>> result;
        for (auto & factor : factors) {
            result.emplace_back();
            for (auto i : factor)
                result.back().push_back(ids[i]);
        }
        return result;
    }
}

auto coverkit::bipartite_k_factorization(const Graph & g, size_t k) -> vector<vector<EdgeIndex>>
{
    auto n = g.vertex_count();
    vector<int> side(n, -1);
    for (auto & component : components(g)) {
        side[component.front()] = 0;
        vector<VertexIndex> queue{component.front()};
        for (size_t i = 0; i < queue.size(); ++i)
            for (auto e : g.incident(queue[i])) {
                auto & edge = g.edge(e);
                if (edge.kind != EdgeKind::UndirectedNormal)
                    throw GraphError("bipartite factorization needs normal undirected edges only");
                auto w = edge.other(queue[i]);
                if (side[w] == -1) {
                    side[w] = 1 - side[queue[i]];
                    queue.push_back(w);
                }
                else if (side[w] == side[queue[i]])
                    throw GraphError("graph is not bipartite");
            }
    }

    vector<size_t> index(n);
    size_t left = 0, right = 0;
    for (VertexIndex v = 0; v < n; ++v)
        index[v] = side[v] == 0 ? left++ : right++;
    if (left != right)
        throw GraphError("graph is not " + std::to_string(k) + "-regular");

    vector<IndexPair> edges;
    vector<EdgeIndex> ids;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        auto & edge = g.edge(e);
        auto l = side[edge.tail] == 0 ? edge.tail : edge.head;
        edges.emplace_back(index[l], index[edge.other(l)]);
        ids.push_back(e);
    }
    return to_edge_ids(split_regular_bipartite(left, edges, k), ids);
}

auto coverkit::two_factorization(const Graph & g, size_t k) -> vector<vector<EdgeIndex>>
{
    vector<IndexPair> edges;
    vector<EdgeIndex> ids;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        auto & edge = g.edge(e);
        if (edge.kind != EdgeKind::UndirectedNormal && edge.kind != EdgeKind::UndirectedLoop)
            throw GraphError("two-factorization needs undirected edges and loops only");
        edges.emplace_back(edge.tail, edge.head);
        ids.push_back(e);
    }
    return to_edge_ids(split_two_factors(g.vertex_count(), edges, k), ids);
}

auto coverkit::directed_cycle_cover_decomposition(const Graph & g, size_t k) -> vector<vector<EdgeIndex>>
{
    vector<IndexPair> arcs;
    vector<EdgeIndex> ids;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        auto & edge = g.edge(e);
        if (! is_directed(edge.kind))
            throw GraphError("cycle cover decomposition needs arcs and directed loops only");
        arcs.emplace_back(edge.tail, edge.head);
        ids.push_back(e);
    }
    return to_edge_ids(split_directed_factors(g.vertex_count(), arcs, k), ids);
}
