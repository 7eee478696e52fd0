#include <coverkit/random_graphs.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

namespace
{
    auto one_factorization(size_t m) -> vector<vector<std::pair<size_t, size_t>>>
    {
        vector<vector<std::pair<size_t, size_t>>> result;
        for (size_t r = 0; r + 1 < m; ++r) {
            vector<std::pair<size_t, size_t>> matching{{m - 1, r}};
            for (size_t i = 1; i < m / 2; ++i)
                matching.emplace_back((r + i) % (m - 1), (r + m - 1 - i) % (m - 1));
            result.push_back(std::move(matching));
        }
        return result;
    }

    auto shuffled(size_t n, std::mt19937_64 & rng) -> vector<size_t>
    {
        vector<size_t> result(n);
        std::iota(result.begin(), result.end(), 0);
        std::ranges::shuffle(result, rng);
        return result;
    }

    auto pick(size_t n, std::mt19937_64 & rng) -> size_t
    {
        return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    }

    // same vertices, the given edges; an empty id asks for a fresh one
    auto rebuild(const Graph & g, const vector<Edge> & edges) -> Graph
    {
        Graph result(g.name());
        for (auto & v : g.vertices())
            result.add_vertex(v.id, v.colour);
        for (auto & e : edges)
            if (! e.id.empty())
                result.add_edge(e.id, e.kind, e.colour, e.tail, e.head);
        for (auto & e : edges)
            if (e.id.empty())
                result.add_edge(e.kind, e.colour, e.tail, e.head);
        return result;
    }
}

auto coverkit::to_string(RegularKind kind) -> string
{
    switch (kind) {
    case RegularKind::Bipartite: return "bipartite";
    case RegularKind::Even: return "even";
    case RegularKind::Directed: return "directed";
    }
    throw std::invalid_argument("unknown regular kind");
}

auto coverkit::random_regular(RegularKind kind, size_t k, size_t m, std::uint64_t seed) -> RegularGraph
{
    std::mt19937_64 rng(seed);
    RegularGraph result{Graph(to_string(kind) + "(" + std::to_string(k) + "," + std::to_string(m) + ")"), {}};
    auto & g = result.graph;

    if (kind == RegularKind::Bipartite) {
        if (k == 0 || k > m)
            throw std::invalid_argument("a bipartite k-regular graph on 2m vertices needs 0 < k <= m");
        for (size_t i = 0; i < m; ++i)
            g.add_vertex("a" + std::to_string(i + 1), "v");
        for (size_t i = 0; i < m; ++i)
            g.add_vertex("b" + std::to_string(i + 1), "v");
        auto left = shuffled(m, rng), right = shuffled(m, rng), shifts = shuffled(m, rng);
        for (size_t c = 0; c < k; ++c) {
            vector<EdgeIndex> colour_class;
            for (size_t i = 0; i < m; ++i)
                colour_class.push_back(g.add_edge(EdgeKind::UndirectedNormal, "a", left[i], m + right[(i + shifts[c]) % m]));
            result.colouring.push_back(std::move(colour_class));
        }
        return result;
    }

    if (m % 2 != 0 || k == 0)
        throw std::invalid_argument("the construction needs m even and k > 0");
    if (kind == RegularKind::Even && k >= m)
        throw std::invalid_argument("a k-regular graph on m vertices needs k < m");
    if (kind == RegularKind::Directed && 2 * k >= m)
        throw std::invalid_argument("a k-in-k-out digraph from matchings of K_m needs 2k < m");
    for (size_t i = 0; i < m; ++i)
        g.add_vertex("v" + std::to_string(i + 1), "v");
    auto label = shuffled(m, rng);
    auto factors = one_factorization(m);
    std::ranges::shuffle(factors, rng);

    if (kind == RegularKind::Even) {
        for (size_t c = 0; c < k; ++c) {
            vector<EdgeIndex> colour_class;
            for (auto [a, b] : factors[c])
                colour_class.push_back(g.add_edge(EdgeKind::UndirectedNormal, "a", label[a], label[b]));
            result.colouring.push_back(std::move(colour_class));
        }
        return result;
    }

    // two disjoint perfect matchings form even cycles; orienting them gives every vertex in- and out-degree 1
    for (size_t c = 0; c < k; ++c) {
        vector<size_t> one(m), two(m);
        for (auto [a, b] : factors[2 * c]) {
            one[a] = b;
            one[b] = a;
        }
        for (auto [a, b] : factors[2 * c + 1]) {
            two[a] = b;
            two[b] = a;
        }
        vector<bool> done(m, false);
        vector<EdgeIndex> colour_class;
        for (size_t start = 0; start < m; ++start) {
            if (done[start])
                continue;
            auto v = start;
            do {
                auto w = one[v];
                colour_class.push_back(g.add_edge(EdgeKind::DirectedNormal, "d", label[v], label[w]));
                colour_class.push_back(g.add_edge(EdgeKind::DirectedNormal, "d", label[w], label[two[w]]));
                done[v] = done[w] = true;
                v = two[w];
            } while (v != start);
        }
        result.colouring.push_back(std::move(colour_class));
    }
    return result;
}

auto coverkit::random_lift(const Graph & h, size_t n, std::mt19937_64 & rng) -> RandomLift
{
    if (n == 0)
        throw std::invalid_argument("a lift needs fibres of size at least 1");
    RandomLift result{Graph(h.name() + "-lift" + std::to_string(n)), {}};
    auto & g = result.graph;
    auto & f = result.projection;
    auto at = [&](VertexIndex v, size_t i) { return v * n + i; };
    for (VertexIndex v = 0; v < h.vertex_count(); ++v)
        for (size_t i = 0; i < n; ++i) {
            g.add_vertex(h.vertex(v).id + "#" + std::to_string(i + 1), h.vertex(v).colour);
            f.vertex_map.push_back(v);
        }

    auto add = [&](EdgeKind kind, const Edge & e, VertexIndex tail, VertexIndex head, EdgeIndex image) {
        g.add_edge(kind, e.colour, tail, head);
        f.edge_map.push_back(image);
    };
    for (EdgeIndex index = 0; index < h.edge_count(); ++index) {
        auto & e = h.edge(index);
        auto permutation = shuffled(n, rng);
        switch (e.kind) {
        case EdgeKind::UndirectedNormal:
        case EdgeKind::DirectedNormal:
            for (size_t i = 0; i < n; ++i)
                add(e.kind, e, at(e.tail, i), at(e.head, permutation[i]), index);
            break;
        case EdgeKind::DirectedLoop:
            for (size_t i = 0; i < n; ++i)
                add(permutation[i] == i ? EdgeKind::DirectedLoop : EdgeKind::DirectedNormal, e, at(e.tail, i), at(e.tail, permutation[i]), index);
            break;
        case EdgeKind::UndirectedLoop:
            // each cycle of the permutation contributes its edges; 1-cycles stay loops and 2-cycles give a double edge
            for (size_t i = 0; i < n; ++i)
                add(permutation[i] == i ? EdgeKind::UndirectedLoop : EdgeKind::UndirectedNormal, e, at(e.tail, i), at(e.tail, permutation[i]), index);
            break;
        case EdgeKind::SemiEdge: {
            // a random involution: pair up a random number of shuffled positions
            auto pairs = std::uniform_int_distribution<size_t>(0, n / 2)(rng);
            for (size_t p = 0; p < pairs; ++p)
                add(EdgeKind::UndirectedNormal, e, at(e.tail, permutation[2 * p]), at(e.tail, permutation[2 * p + 1]), index);
            for (size_t i = 2 * pairs; i < n; ++i)
                add(EdgeKind::SemiEdge, e, at(e.tail, permutation[i]), at(e.tail, permutation[i]), index);
            break;
        }
        }
    }
    return result;
}

auto coverkit::random_switch(Graph & g, const vector<size_t> & block_of, std::mt19937_64 & rng) -> bool
{
    if (g.edge_count() < 2)
        return false;
    vector<Edge> edges = g.edges();
    auto first = pick(edges.size(), rng), second = pick(edges.size(), rng);
    if (first == second)
        return false;
    auto a = edges[first], b = edges[second];
    if (a.colour != b.colour)
        return false;
    auto fresh = [](EdgeKind kind, const string & colour, VertexIndex tail, VertexIndex head) { return Edge{"", kind, colour, tail, head}; };
    auto same_block = [&](VertexIndex x, VertexIndex y) { return block_of[x] == block_of[y]; };
    vector<Edge> added;

    auto coin = std::bernoulli_distribution(0.5)(rng);
    if (a.kind == EdgeKind::UndirectedNormal && b.kind == EdgeKind::UndirectedNormal) {
        if (coin)
            std::swap(b.tail, b.head);
        if (a.head == b.head || a.tail == b.head || b.tail == a.head)
            return false;
        if (a.tail != b.tail && same_block(a.tail, b.tail) && same_block(a.head, b.head)) {
            // tail-tail and head-head blocks agree: exchange heads
            added = {fresh(a.kind, a.colour, a.tail, b.head), fresh(a.kind, a.colour, b.tail, a.head)};
        }
        else if (a.tail == b.tail && same_block(a.head, a.tail) && same_block(b.head, a.tail)) {
            // u-v and u-w inside one block become a loop at u and the edge v-w
            added = {fresh(EdgeKind::UndirectedLoop, a.colour, a.tail, a.tail), fresh(a.kind, a.colour, a.head, b.head)};
        }
        else
            return false;
    }
    else if (a.kind == EdgeKind::DirectedNormal && b.kind == EdgeKind::DirectedNormal) {
        if (a.tail == b.head)
            return false;
        if (b.tail != a.head && a.head != b.head && same_block(a.tail, b.tail) && same_block(a.head, b.head))
            added = {fresh(a.kind, a.colour, a.tail, b.head), fresh(a.kind, a.colour, b.tail, a.head)};
        else if (a.head == b.tail && a.tail != b.head && same_block(a.tail, a.head) && same_block(b.head, a.head))
            // v->u and u->w inside one block become a directed loop at u and v->w
            added = {fresh(EdgeKind::DirectedLoop, a.colour, a.head, a.head), fresh(a.kind, a.colour, a.tail, b.head)};
        else
            return false;
    }
    else if (a.kind == EdgeKind::SemiEdge && b.kind == EdgeKind::SemiEdge) {
        if (a.tail == b.tail || ! same_block(a.tail, b.tail))
            return false;
        added = {fresh(EdgeKind::UndirectedNormal, a.colour, a.tail, b.tail)};
    }
    else if (a.kind == EdgeKind::UndirectedNormal && b.kind == EdgeKind::SemiEdge && coin) {
        // an edge inside a block splits into two semi-edges
        if (! same_block(a.tail, a.head))
            return false;
        added = {fresh(EdgeKind::SemiEdge, a.colour, a.tail, a.tail), fresh(EdgeKind::SemiEdge, a.colour, a.head, a.head)};
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(first));
        edges.insert(edges.end(), added.begin(), added.end());
        g = rebuild(g, edges);
        return true;
    }
    else if (a.kind == EdgeKind::UndirectedLoop && b.kind == EdgeKind::UndirectedNormal) {
        auto u = a.tail;
        if (u == b.tail || u == b.head || ! same_block(u, b.tail) || ! same_block(u, b.head))
            return false;
        added = {fresh(b.kind, a.colour, u, b.tail), fresh(b.kind, a.colour, u, b.head)};
    }
    else if (a.kind == EdgeKind::DirectedLoop && b.kind == EdgeKind::DirectedNormal) {
        auto u = a.tail;
        if (u == b.tail || u == b.head || ! same_block(u, b.tail) || ! same_block(u, b.head))
            return false;
        added = {fresh(b.kind, a.colour, b.tail, u), fresh(b.kind, a.colour, u, b.head)};
    }
    else
        return false;

    vector<Edge> kept;
    for (size_t i = 0; i < edges.size(); ++i)
        if (i != first && i != second)
            kept.push_back(edges[i]);
    kept.insert(kept.end(), added.begin(), added.end());
    g = rebuild(g, kept);
    return true;
}

auto coverkit::random_connected_graph(const RandomGraphOptions & options, std::mt19937_64 & rng) -> Graph
{
    if (options.vertices == 0 || options.vertex_colours == 0 || options.edge_colours == 0)
        throw std::invalid_argument("a random graph needs vertices and colours");
    Graph g("random");
    for (size_t i = 0; i < options.vertices; ++i)
        g.add_vertex("v" + std::to_string(i + 1), "c" + std::to_string(pick(options.vertex_colours, rng) + 1));
    auto undirected = [&] { return "a" + std::to_string(pick(options.edge_colours, rng) + 1); };
    auto directed = [&] { return "d" + std::to_string(pick(options.edge_colours, rng) + 1); };

    auto order = shuffled(options.vertices, rng);
    for (size_t i = 1; i < options.vertices; ++i) {
        auto parent = order[pick(i, rng)];
        if (options.directed && std::bernoulli_distribution(0.25)(rng))
            g.add_edge(EdgeKind::DirectedNormal, directed(), parent, order[i]);
        else
            g.add_edge(EdgeKind::UndirectedNormal, undirected(), parent, order[i]);
    }

    vector<EdgeKind> kinds{EdgeKind::UndirectedNormal, EdgeKind::UndirectedNormal};
    if (options.loops)
        kinds.push_back(EdgeKind::UndirectedLoop);
    if (options.semi_edges)
        kinds.push_back(EdgeKind::SemiEdge);
    if (options.directed) {
        kinds.push_back(EdgeKind::DirectedNormal);
        if (options.loops)
            kinds.push_back(EdgeKind::DirectedLoop);
    }
    for (size_t i = 0; i < options.extra_edges; ++i) {
        auto kind = kinds[pick(kinds.size(), rng)];
        auto u = pick(options.vertices, rng);
        auto v = u;
        if (kind == EdgeKind::UndirectedNormal || kind == EdgeKind::DirectedNormal) {
            if (options.vertices < 2)
                continue;
            while (v == u)
                v = pick(options.vertices, rng);
        }
        g.add_edge(kind, is_directed(kind) ? directed() : undirected(), u, v);
    }
    return g;
}
