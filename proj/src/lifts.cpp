#include <coverkit/lifts.hpp>
#include <coverkit/partition.hpp>

#include <algorithm>
#include <stdexcept>
#include <tuple>

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

namespace
{
    // block index of h for every vertex of other, matched by id
    auto blocks_by_id(const Graph & other, const Graph & h, const Partition & hp) -> vector<size_t>
    {
        vector<size_t> result;
        for (auto & v : other.vertices()) {
            auto w = h.find_vertex(v.id);
            if (! w)
                throw std::invalid_argument("vertex '" + v.id + "' of the block graph is not a vertex of the host");
            if (h.vertex(*w).colour != v.colour)
                throw std::invalid_argument("vertex '" + v.id + "' has a different colour in the host");
            result.push_back(hp.block_of[*w]);
        }
        return result;
    }

    // for each block of p (a partition of other), the matching block of h; throws unless they coincide as vertex sets
    auto align_blocks(const Graph & other, const Partition & p, const Graph & h, const Partition & hp) -> vector<size_t>
    {
        auto host_block = blocks_by_id(other, h, hp);
        vector<size_t> result;
        for (auto & block : p.blocks) {
            auto target = host_block[block.front()];
            for (auto v : block)
                if (host_block[v] != target)
                    throw std::invalid_argument("the blocks of the block graph are not blocks of the host");
            if (hp.blocks[target].size() != block.size())
                throw std::invalid_argument("the blocks of the block graph are not blocks of the host");
            result.push_back(target);
        }
        return result;
    }

    using EdgeKey = std::tuple<EdgeKind, string, string, string>;

    auto edge_key(const Graph & g, const Edge & e) -> EdgeKey
    {
        auto a = g.vertex(e.tail).id, b = g.vertex(e.head).id;
        if (! is_directed(e.kind) && b < a)
            std::swap(a, b);
        return {e.kind, e.colour, a, b};
    }

    // 1-factorization of K_m (m even) by the round-robin method
    auto round_robin(size_t m) -> vector<vector<pair<size_t, size_t>>>
    {
        vector<vector<pair<size_t, size_t>>> result;
        for (size_t r = 0; r + 1 < m; ++r) {
            vector<pair<size_t, size_t>> matching{{m - 1, r}};
            for (size_t i = 1; i < m / 2; ++i)
                matching.emplace_back((r + i) % (m - 1), (r + m - 1 - i) % (m - 1));
            result.push_back(std::move(matching));
        }
        return result;
    }

    class GarbageBuilder
    {
    private:
        Graph & _out;
        size_t _m, _n, _limit;
        vector<vector<pair<size_t, size_t>>> _factors;
        std::map<std::tuple<char, VertexIndex, VertexIndex>, size_t> _used;

        auto next(char pool, VertexIndex x, VertexIndex y) -> size_t
        {
            auto & used = _used[{pool, x, y}];
            if (used >= _limit)
                throw std::logic_error("matching pool exhausted");
            return used++;
        }

    public:
        using Matching = vector<pair<VertexIndex, VertexIndex>>;

        GarbageBuilder(Graph & out, size_t m, size_t n, size_t limit) :
            _out(out), _m(m), _n(n), _limit(limit), _factors(round_robin(m))
        {
        }

        [[nodiscard]] auto copy(VertexIndex x, size_t i, size_t j) const -> VertexIndex
        {
            return (i * _m + j) * _n + x;
        }

        // pools A (i = 0) and B (i = 1): perfect matchings among the copies x_i*
        auto within(VertexIndex x, size_t i) -> Matching
        {
            Matching result;
            for (auto [a, b] : _factors[next(i == 0 ? 'A' : 'B', x, x)])
                result.emplace_back(copy(x, i, a), copy(x, i, b));
            return result;
        }

        // pools C, D, E and F: shifted matchings between the copies x_i* and y_i'*
        auto across(char pool, VertexIndex x, size_t i, VertexIndex y, size_t i2) -> Matching
        {
            auto key_x = x, key_y = y;
            if ((pool == 'D' || pool == 'E') && key_y < key_x)
                std::swap(key_x, key_y);
            // shifts start at 1 except in C, so no new edge joins two vertices of one copy of g
            auto t = next(pool, key_x, key_y) + (pool == 'C' ? 0 : 1);
            Matching result;
            for (size_t j = 0; j < _m; ++j) {
                if (key_x == x)
                    result.emplace_back(copy(x, i, j), copy(y, i2, (j + t) % _m));
                else
                    result.emplace_back(copy(x, i, (j + t) % _m), copy(y, i2, j));
            }
            return result;
        }

        auto add(const Matching & matching, const string & colour, bool directed, bool forward = true) -> void
        {
            for (auto [a, b] : matching) {
                if (! directed)
                    _out.add_edge(EdgeKind::UndirectedNormal, colour, a, b);
                else if (forward)
                    _out.add_edge(EdgeKind::DirectedNormal, colour, a, b);
                else
                    _out.add_edge(EdgeKind::DirectedNormal, colour, b, a);
            }
        }

        // orients the even cycles of the union of two disjoint perfect matchings
        auto add_oriented_pair(const Matching & first, const Matching & second, const string & colour) -> void
        {
            std::map<VertexIndex, VertexIndex> one, two;
            for (auto [a, b] : first) {
                one[a] = b;
                one[b] = a;
            }
            for (auto [a, b] : second) {
                two[a] = b;
                two[b] = a;
            }
            std::set<VertexIndex> done;
            for (auto [start, ignored] : one) {
                if (done.contains(start))
                    continue;
                auto v = start;
                do {
                    auto w = one[v];
                    auto u = two[w];
                    _out.add_edge(EdgeKind::DirectedNormal, colour, v, w);
                    _out.add_edge(EdgeKind::DirectedNormal, colour, w, u);
                    done.insert(v);
                    done.insert(w);
                    v = u;
                } while (v != start);
            }
        }
    };
}

auto coverkit::contract_matching(const Graph & h_prime, const string & matching_colour) -> Contraction
{
    auto dp = degree_partition(h_prime);
    auto & block_of = dp.partition.block_of;

    vector<EdgeIndex> matching;
    for (EdgeIndex e = 0; e < h_prime.edge_count(); ++e)
        if (h_prime.edge(e).colour == matching_colour)
            matching.push_back(e);
    if (matching.empty())
        throw std::invalid_argument("no edges of colour '" + matching_colour + "'");
    auto & first = h_prime.edge(matching.front());
    if (first.kind != EdgeKind::UndirectedNormal)
        throw std::invalid_argument("the matching colour must be carried by undirected normal edges");
    auto block_a = block_of[first.tail], block_b = block_of[first.head];
    if (block_a == block_b)
        throw std::invalid_argument("the matching must join two different blocks");
    auto & a_block = dp.partition.blocks[block_a];
    auto & b_block = dp.partition.blocks[block_b];
    if (a_block.size() != b_block.size())
        throw std::invalid_argument("the matched blocks must have equal size");

    std::map<VertexIndex, VertexIndex> partner;
    std::map<VertexIndex, size_t> multiplicity;
    for (auto e : matching) {
        auto & edge = h_prime.edge(e);
        if (edge.kind != EdgeKind::UndirectedNormal)
            throw std::invalid_argument("the matching colour must be carried by undirected normal edges");
        auto a = edge.tail, b = edge.head;
        if (block_of[a] == block_b)
            std::swap(a, b);
        if (block_of[a] != block_a || block_of[b] != block_b)
            throw std::invalid_argument("the matching colour leaves the two matched blocks");
        auto [it, fresh] = partner.emplace(a, b);
        if (! fresh && it->second != b)
            throw std::invalid_argument("the edges of colour '" + matching_colour + "' do not form a multiple matching");
        ++multiplicity[a];
    }
    if (partner.size() != a_block.size())
        throw std::invalid_argument("the matching is not perfect between the two blocks");
    auto k = multiplicity.begin()->second;
    for (auto [a, count] : multiplicity)
        if (count != k)
            throw std::invalid_argument("the matching multiplicity differs between pairs");

    Contraction result;
    result.h_prime = h_prime;
    result.matching_colour = matching_colour;
    result.k = k;
    result.a_colour = h_prime.vertex(a_block.front()).colour;
    result.b_colour = h_prime.vertex(b_block.front()).colour;
    result.contracted_colour = result.a_colour + "+" + result.b_colour;
    while (h_prime.colour_use(result.contracted_colour))
        result.contracted_colour += "'";

    for (auto & e : h_prime.edges()) {
        if (e.colour == matching_colour)
            continue;
        auto ta = block_of[e.tail] == block_a || block_of[e.head] == block_a;
        auto tb = block_of[e.tail] == block_b || block_of[e.head] == block_b;
        if (ta && tb)
            throw std::invalid_argument("edge '" + e.id + "' joins the matched blocks outside the matching");
        if (ta)
            result.a_edge_colours.insert(e.colour);
        if (tb)
            result.b_edge_colours.insert(e.colour);
    }
    for (auto & colour : result.a_edge_colours)
        if (result.b_edge_colours.contains(colour))
            throw std::invalid_argument("colour '" + colour + "' is used at both matched blocks");

    Graph h(h_prime.name() + "-contracted");
    vector<VertexIndex> image(h_prime.vertex_count());
    for (VertexIndex v = 0; v < h_prime.vertex_count(); ++v)
        if (block_of[v] != block_a && block_of[v] != block_b)
            image[v] = h.add_vertex(h_prime.vertex(v).id, h_prime.vertex(v).colour);
    for (auto [a, b] : partner) {
        auto c = h.add_vertex(h_prime.vertex(a).id + "/" + h_prime.vertex(b).id, result.contracted_colour);
        image[a] = image[b] = c;
        result.pairs.emplace_back(a, b);
    }
    for (auto & e : h_prime.edges())
        if (e.colour != matching_colour)
            h.add_edge(e.id, e.kind, e.colour, image[e.tail], image[e.head]);
    result.h = std::move(h);
    return result;
}

auto coverkit::deprime_lift(const Graph & g, const Contraction & contraction) -> Graph
{
    auto k = contraction.k;
    auto n = g.vertex_count();
    auto contracted = [&](VertexIndex v) { return g.vertex(v).colour == contraction.contracted_colour; };
    auto side_of = [&](const Edge & e) {
        if (contraction.a_edge_colours.contains(e.colour))
            return 0;
        if (contraction.b_edge_colours.contains(e.colour))
            return 1;
        throw std::invalid_argument("colour '" + e.colour + "' of edge '" + e.id + "' belongs to neither matched block");
    };

    // the split graph: vertex v keeps index v (w.a for contracted w), w.b gets a fresh index
    vector<VertexIndex> b_copy(n, n);
    Graph split;
    for (VertexIndex v = 0; v < n; ++v) {
        auto & vertex = g.vertex(v);
        if (contracted(v))
            split.add_vertex(vertex.id + ".a", contraction.a_colour);
        else
            split.add_vertex(vertex.id, vertex.colour);
    }
    for (VertexIndex v = 0; v < n; ++v)
        if (contracted(v))
            b_copy[v] = split.add_vertex(g.vertex(v).id + ".b", contraction.b_colour);
    for (auto & e : g.edges()) {
        auto tail = e.tail, head = e.head;
        if (contracted(tail) || contracted(head)) {
            auto side = side_of(e);
            if (side == 1 && contracted(tail))
                tail = b_copy[tail];
            if (side == 1 && contracted(head))
                head = b_copy[head];
        }
        split.add_edge(e.id, e.kind, e.colour, tail, head);
    }

    Graph result(g.name() + "-deprimed");
    auto suffix = [&](size_t i) { return k > 1 ? "#" + std::to_string(i + 1) : string(); };
    for (size_t i = 0; i < k; ++i)
        for (auto & v : split.vertices())
            result.add_vertex(v.id + suffix(i), v.colour);
    auto size = split.vertex_count();
    for (size_t i = 0; i < k; ++i)
        for (auto & e : split.edges())
            result.add_edge(e.id + suffix(i), e.kind, e.colour, i * size + e.tail, i * size + e.head);
    for (VertexIndex w = 0; w < n; ++w)
        if (contracted(w))
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j)
                    result.add_edge(EdgeKind::UndirectedNormal, contraction.matching_colour, i * size + w, j * size + b_copy[w]);
    return result;
}

auto coverkit::spanning_subgraph(const Graph & h_prime, const Graph & h) -> Graph
{
    Graph result(h_prime.name() + "-spanning");
    for (auto & v : h.vertices())
        result.add_vertex(v.id, v.colour);
    for (auto & v : h_prime.vertices()) {
        auto w = h.find_vertex(v.id);
        if (! w || h.vertex(*w).colour != v.colour)
            throw std::invalid_argument("vertex '" + v.id + "' of the block graph is not a vertex of the host");
    }
    for (auto & e : h_prime.edges())
        result.add_edge(e.id, e.kind, e.colour, result.vertex_index(h_prime.vertex(e.tail).id), result.vertex_index(h_prime.vertex(e.head).id));
    return result;
}

auto coverkit::spanning_lift(const Graph & g, const Graph & h_prime, const Graph & h) -> optional<Graph>
{
    auto hd = degree_partition(h);
    auto pd = degree_partition(h_prime);
    auto host_block = align_blocks(h_prime, pd.partition, h, hd.partition);
    auto gd = degree_partition(g);
    if (gd.matrix != pd.matrix)
        return std::nullopt;

    optional<size_t> ratio;
    for (size_t i = 0; i < pd.partition.size(); ++i) {
        auto fibre = gd.partition.blocks[i].size(), block = pd.partition.blocks[i].size();
        if (fibre % block != 0 || (ratio && *ratio != fibre / block))
            return std::nullopt;
        ratio = fibre / block;
    }
    auto k = ratio.value_or(1);

    Graph result = g;
    result.set_name(g.name() + "-spanning");
    vector<bool> present(hd.partition.size(), false);
    for (auto block : host_block)
        present[block] = true;
    for (size_t block = 0; block < hd.partition.size(); ++block)
        if (! present[block])
            for (auto w : hd.partition.blocks[block])
                for (size_t i = 0; i < k; ++i) {
                    auto id = "pad." + h.vertex(w).id + "." + std::to_string(i + 1);
                    while (result.find_vertex(id))
                        id += "'";
                    result.add_vertex(id, h.vertex(w).colour);
                }
    return result;
}

auto coverkit::is_balanced(const Graph & h) -> bool
{
    auto dp = degree_partition(h);
    for (auto & block : dp.partition.blocks) {
        if (block.size() > 2)
            throw std::invalid_argument("balance is defined for blocks of at most 2 vertices");
        if (block.size() < 2)
            continue;
        std::map<string, long> difference;
        for (auto & e : h.edges())
            if (e.kind == EdgeKind::SemiEdge) {
                if (e.tail == block[0])
                    ++difference[e.colour];
                else if (e.tail == block[1])
                    --difference[e.colour];
            }
        for (auto [colour, d] : difference)
            if (d != 0)
                return false;
    }
    return true;
}

auto coverkit::garbage_lift(const Graph & g, const Graph & h_prime, const Graph & h, size_t m) -> optional<Graph>
{
    size_t max_degree = 0;
    for (VertexIndex v = 0; v < h.vertex_count(); ++v)
        max_degree = std::max(max_degree, total_degree(h, v));
    if (m % 2 != 0 || m <= max_degree)
        throw std::invalid_argument("m must be even and exceed the maximum degree " + std::to_string(max_degree) + " of the host");
    if (h_prime.vertex_count() != h.vertex_count())
        throw std::invalid_argument("the block graph must be spanning");

    // h_prime must be the host restricted to its own colours
    auto kept = h_prime.edge_colours();
    std::multiset<EdgeKey> restricted, given;
    for (auto & e : h.edges())
        if (std::ranges::find(kept, e.colour) != kept.end())
            restricted.insert(edge_key(h, e));
    for (auto & e : h_prime.edges())
        given.insert(edge_key(h_prime, e));
    if (restricted != given)
        throw std::invalid_argument("the block graph is not the host restricted to its colours");

    auto hd = degree_partition(h);
    for (auto & block : hd.partition.blocks)
        if (block.size() > 2)
            throw std::invalid_argument("every block of the host must have at most 2 vertices");
    auto pd = degree_partition(h_prime);
    if (pd.partition.size() != hd.partition.size())
        throw std::invalid_argument("the block graph must have the degree partition of the host");
    auto host_block = align_blocks(h_prime, pd.partition, h, hd.partition);
    if (! is_balanced(h_prime))
        throw std::invalid_argument("the block graph must be balanced");

    auto gd = degree_partition(g);
    if (gd.matrix != pd.matrix)
        return std::nullopt;
    // g-vertices of each host block, in index order
    vector<vector<VertexIndex>> fibre(hd.partition.size());
    optional<size_t> ratio;
    for (size_t i = 0; i < pd.partition.size(); ++i) {
        auto & block = gd.partition.blocks[i];
        auto size = pd.partition.blocks[i].size();
        if (block.size() % size != 0 || (ratio && *ratio != block.size() / size))
            return std::nullopt;
        ratio = block.size() / size;
        fibre[host_block[i]] = block;
    }

    auto n = g.vertex_count();
    Graph out(g.name() + "-garbage");
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < m; ++j)
            for (auto & v : g.vertices())
                out.add_vertex(v.id + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", v.colour);
    GarbageBuilder pools(out, m, n, max_degree);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < m; ++j)
            for (auto & e : g.edges())
                out.add_edge(e.id + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", e.kind, e.colour, pools.copy(e.tail, i, j),
                    pools.copy(e.head, i, j));

    auto & blocks = hd.partition.blocks;
    for (auto & colour : h.edge_colours()) {
        if (std::ranges::find(kept, colour) != kept.end())
            continue;
        auto directed = h.colour_use(colour) == Graph::ColourUse::DirectedEdge;
        // edges of this colour from u to v; undirected edges count in both orientations
        auto count = [&](VertexIndex u, VertexIndex v, EdgeKind kind) {
            size_t result = 0;
            for (auto & e : h.edges())
                if (e.colour == colour && e.kind == kind
                    && ((e.tail == u && e.head == v) || (! is_directed(kind) && e.tail == v && e.head == u)))
                    ++result;
            return result;
        };

        for (size_t s = 0; s < blocks.size(); ++s) {
            auto r = blocks[s][0];
            if (blocks[s].size() == 1) {
                auto around = count(r, r, EdgeKind::SemiEdge) + 2 * count(r, r, EdgeKind::UndirectedLoop);
                auto loops = count(r, r, EdgeKind::DirectedLoop);
                for (auto x : fibre[s]) {
                    for (size_t t = 0; t < around; ++t) {
                        pools.add(pools.within(x, 0), colour, false);
                        pools.add(pools.within(x, 1), colour, false);
                    }
                    for (size_t t = 0; t < loops; ++t) {
                        pools.add(pools.across('C', x, 0, x, 1), colour, true, true);
                        pools.add(pools.across('C', x, 0, x, 1), colour, true, false);
                    }
                }
                continue;
            }
            auto green = blocks[s][1];
            if (directed) {
                auto loops = count(r, r, EdgeKind::DirectedLoop);
                auto arcs = count(r, green, EdgeKind::DirectedNormal);
                for (auto x : fibre[s]) {
                    for (size_t t = 0; t < loops; ++t)
                        for (size_t i = 0; i < 2; ++i) {
                            auto first = pools.within(x, i);
                            pools.add_oriented_pair(first, pools.within(x, i), colour);
                        }
                    for (size_t t = 0; t < arcs; ++t) {
                        pools.add(pools.across('C', x, 0, x, 1), colour, true, true);
                        pools.add(pools.across('C', x, 0, x, 1), colour, true, false);
                    }
                }
            }
            else {
                auto around = count(r, r, EdgeKind::SemiEdge) + 2 * count(r, r, EdgeKind::UndirectedLoop);
                auto across = count(r, green, EdgeKind::UndirectedNormal);
                for (auto x : fibre[s]) {
                    for (size_t t = 0; t < around; ++t) {
                        pools.add(pools.within(x, 0), colour, false);
                        pools.add(pools.within(x, 1), colour, false);
                    }
                    for (size_t t = 0; t < across; ++t)
                        pools.add(pools.across('C', x, 0, x, 1), colour, false);
                }
            }
        }

        auto kind = directed ? EdgeKind::DirectedNormal : EdgeKind::UndirectedNormal;
        // edges from block s to block t; arcs are oriented from s
        auto interblock = [&](size_t s, size_t t) {
            auto & from = blocks[s];
            auto & to = blocks[t];
            if (from.size() == 1 && to.size() == 1) {
                auto b = count(from[0], to[0], kind);
                for (size_t i = 0; i < fibre[s].size() && b > 0; ++i) {
                    auto x = fibre[s][i], y = fibre[t][i];
                    for (size_t c = 0; c < b; ++c) {
                        pools.add(pools.across('D', x, 0, y, 0), colour, directed);
                        pools.add(pools.across('E', x, 1, y, 1), colour, directed);
                    }
                }
            }
            else if (from.size() == 1 || to.size() == 1) {
                auto single = from.size() == 1 ? s : t, pair = from.size() == 1 ? t : s;
                auto forward = single == s;
                auto b = count(from[0], to[0], kind);
                for (size_t i = 0; i < fibre[single].size() && b > 0; ++i) {
                    auto x = fibre[single][i], y1 = fibre[pair][2 * i], y2 = fibre[pair][2 * i + 1];
                    for (size_t c = 0; c < b; ++c) {
                        pools.add(pools.across('D', x, 0, y1, 0), colour, directed, forward);
                        pools.add(pools.across('E', x, 1, y2, 1), colour, directed, forward);
                        pools.add(pools.across('F', x, 0, y1, 1), colour, directed, forward);
                        pools.add(pools.across('F', y2, 0, x, 1), colour, directed, ! forward);
                    }
                }
            }
            else {
                auto b = count(from[0], to[0], kind), c = count(from[0], to[1], kind);
                for (size_t i = 0; i < fibre[s].size() && b + c > 0; ++i) {
                    auto x = fibre[s][i], y = fibre[t][i];
                    for (size_t t2 = 0; t2 < b; ++t2) {
                        pools.add(pools.across('D', x, 0, y, 0), colour, directed);
                        pools.add(pools.across('E', x, 1, y, 1), colour, directed);
                    }
                    for (size_t t2 = 0; t2 < c; ++t2) {
                        pools.add(pools.across('F', x, 0, y, 1), colour, directed);
                        pools.add(pools.across('F', y, 0, x, 1), colour, directed, false);
                    }
                }
            }
        };
        for (size_t s = 0; s < blocks.size(); ++s)
            for (size_t t = 0; t < blocks.size(); ++t)
                if (s != t && (directed || s < t))
                    interblock(s, t);
    }
    if (is_simple(g) && ! is_simple(out))
        throw std::logic_error("the garbage collection lift produced a graph that is not simple");
    return out;
}
