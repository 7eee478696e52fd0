#include <coverkit/edge_assignment.hpp>
#include <coverkit/factorization.hpp>

#include <map>
#include <tuple>

using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

auto coverkit::fibres(const Graph & h, const vector<VertexIndex> & fv) -> vector<vector<VertexIndex>>
{
    vector<vector<VertexIndex>> result(h.vertex_count());
    for (VertexIndex v = 0; v < fv.size(); ++v)
        result.at(fv[v]).push_back(v);
    return result;
}

auto coverkit::group_edges(const Graph & g, const Graph & h, const vector<VertexIndex> & fv) -> vector<EdgeClass>
{
    std::map<std::tuple<EdgeClassType, string, VertexIndex, VertexIndex>, EdgeClass> classes;
    auto at = [&](EdgeClassType type, const string & colour, VertexIndex x, VertexIndex y) -> EdgeClass & {
        auto key = std::make_tuple(type, colour, x, y);
        auto it = classes.find(key);
        if (it == classes.end())
            it = classes.emplace(key, EdgeClass{type, colour, x, y, {}, {}, {}, {}, {}}).first;
        return it->second;
    };

    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
        auto & edge = h.edge(e);
        switch (edge.kind) {
        case EdgeKind::UndirectedNormal:
            at(EdgeClassType::Cross, edge.colour, std::min(edge.tail, edge.head), std::max(edge.tail, edge.head)).h_normal.push_back(e);
            break;
        case EdgeKind::DirectedNormal: at(EdgeClassType::CrossDirected, edge.colour, edge.tail, edge.head).h_normal.push_back(e); break;
        case EdgeKind::UndirectedLoop: at(EdgeClassType::Fibre, edge.colour, edge.tail, edge.tail).h_loops.push_back(e); break;
        case EdgeKind::SemiEdge: at(EdgeClassType::Fibre, edge.colour, edge.tail, edge.tail).h_semis.push_back(e); break;
        case EdgeKind::DirectedLoop: at(EdgeClassType::FibreDirected, edge.colour, edge.tail, edge.tail).h_dloops.push_back(e); break;
        }
    }

    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        auto & edge = g.edge(e);
        auto x = fv.at(edge.tail), y = fv.at(edge.head);
        switch (edge.kind) {
        case EdgeKind::UndirectedNormal:
            if (x != y)
                at(EdgeClassType::Cross, edge.colour, std::min(x, y), std::max(x, y)).g_edges.push_back(e);
            else
                at(EdgeClassType::Fibre, edge.colour, x, x).g_edges.push_back(e);
            break;
        case EdgeKind::DirectedNormal:
            if (x != y)
                at(EdgeClassType::CrossDirected, edge.colour, x, y).g_edges.push_back(e);
            else
                at(EdgeClassType::FibreDirected, edge.colour, x, x).g_edges.push_back(e);
            break;
        case EdgeKind::UndirectedLoop:
        case EdgeKind::SemiEdge: at(EdgeClassType::Fibre, edge.colour, x, x).g_edges.push_back(e); break;
        case EdgeKind::DirectedLoop: at(EdgeClassType::FibreDirected, edge.colour, x, x).g_edges.push_back(e); break;
        }
    }

    vector<EdgeClass> result;
    for (auto & [_, c] : classes)
        result.push_back(std::move(c));
    return result;
}

namespace
{
    auto local_index(const vector<VertexIndex> & fibre, size_t g_size) -> vector<size_t>
    {
        vector<size_t> result(g_size, static_cast<size_t>(-1));
        for (size_t i = 0; i < fibre.size(); ++i)
            result[fibre[i]] = i;
        return result;
    }
}

auto coverkit::assign_cross_class(const Graph & g, const vector<vector<VertexIndex>> & fibre_of, const vector<VertexIndex> & fv,
    const EdgeClass & c, vector<EdgeIndex> & edge_map) -> bool
{
    auto k = c.h_normal.size();
    if (k == 0)
        return c.g_edges.empty();
    auto & left = fibre_of[c.x];
    auto & right = fibre_of[c.y];
    if (left.size() != right.size())
        return false;
    auto left_index = local_index(left, g.vertex_count());
    auto right_index = local_index(right, g.vertex_count());

    vector<IndexPair> pairs;
    vector<size_t> left_degree(left.size(), 0), right_degree(right.size(), 0);
    for (auto e : c.g_edges) {
        auto & edge = g.edge(e);
        auto l = fv[edge.tail] == c.x ? edge.tail : edge.head;
        auto r = edge.other(l);
        pairs.emplace_back(left_index[l], right_index[r]);
        ++left_degree[left_index[l]];
        ++right_degree[right_index[r]];
    }
    for (size_t i = 0; i < left.size(); ++i)
        if (left_degree[i] != k || right_degree[i] != k)
            return false;

    auto factors = split_regular_bipartite(left.size(), pairs, k);
    for (size_t i = 0; i < k; ++i)
        for (auto p : factors[i])
            edge_map[c.g_edges[p]] = c.h_normal[i];
    return true;
}

auto coverkit::assign_fibre_directed_class(const Graph & g, const vector<vector<VertexIndex>> & fibre_of, const EdgeClass & c,
    vector<EdgeIndex> & edge_map) -> bool
{
    auto d = c.h_dloops.size();
    if (d == 0)
        return c.g_edges.empty();
    auto & fibre = fibre_of[c.x];
    auto index = local_index(fibre, g.vertex_count());
    vector<IndexPair> arcs;
    vector<size_t> out(fibre.size(), 0), in(fibre.size(), 0);
    for (auto e : c.g_edges) {
        auto & edge = g.edge(e);
        arcs.emplace_back(index[edge.tail], index[edge.head]);
        ++out[index[edge.tail]];
        ++in[index[edge.head]];
    }
    for (size_t i = 0; i < fibre.size(); ++i)
        if (out[i] != d || in[i] != d)
            return false;
    auto factors = split_directed_factors(fibre.size(), arcs, d);
    for (size_t i = 0; i < d; ++i)
        for (auto p : factors[i])
            edge_map[c.g_edges[p]] = c.h_dloops[i];
    return true;
}

auto coverkit::assign_fibre_loops(const Graph & g, const vector<VertexIndex> & fibre, const vector<EdgeIndex> & edges,
    const vector<EdgeIndex> & h_loops, vector<EdgeIndex> & edge_map) -> bool
{
    auto l = h_loops.size();
    if (l == 0)
        return edges.empty();
    auto index = local_index(fibre, g.vertex_count());
    vector<IndexPair> pairs;
    vector<size_t> deg(fibre.size(), 0);
    for (auto e : edges) {
        auto & edge = g.edge(e);
        if (edge.kind != EdgeKind::UndirectedNormal && edge.kind != EdgeKind::UndirectedLoop)
            return false;
        pairs.emplace_back(index[edge.tail], index[edge.head]);
        deg[index[edge.tail]] += 1;
        deg[index[edge.head]] += 1;
    }
    for (auto d : deg)
        if (d != 2 * l)
            return false;
    auto factors = split_two_factors(fibre.size(), pairs, l);
    for (size_t i = 0; i < l; ++i)
        for (auto p : factors[i])
            edge_map[edges[p]] = h_loops[i];
    return true;
}
