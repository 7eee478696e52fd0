#include <coverkit/partition.hpp>

#include <algorithm>

using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

auto Partition::size() const -> size_t
{
    return blocks.size();
}

auto RefinementMatrix::at(size_t i, size_t j, const string & colour, Direction d) const -> size_t
{
    auto it = entries.find(Key{i, j, colour, d});
    return it == entries.end() ? 0 : it->second;
}

auto coverkit::vertex_signature(const Graph & g, const vector<size_t> & block_of, VertexIndex v) -> Signature
{
    std::map<std::tuple<string, Direction, size_t>, size_t> counts;
    for (auto e : g.incident(v)) {
        auto & edge = g.edge(e);
        switch (edge.kind) {
        case EdgeKind::UndirectedNormal:
            ++counts[{edge.colour, Direction::Undirected, block_of[edge.other(v)]}];
            break;
        case EdgeKind::DirectedNormal:
            if (edge.tail == v)
                ++counts[{edge.colour, Direction::Out, block_of[edge.head]}];
            else
                ++counts[{edge.colour, Direction::In, block_of[edge.tail]}];
            break;
        case EdgeKind::UndirectedLoop:
            counts[{edge.colour, Direction::Undirected, block_of[v]}] += 2;
            break;
        case EdgeKind::DirectedLoop:
            ++counts[{edge.colour, Direction::Out, block_of[v]}];
            ++counts[{edge.colour, Direction::In, block_of[v]}];
            break;
        case EdgeKind::SemiEdge:
            ++counts[{edge.colour, Direction::Undirected, block_of[v]}];
            break;
        }
    }

    Signature result;
    for (auto & [key, count] : counts)
        result.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key), count);
    return result;
}

auto coverkit::degree_partition(const Graph & g) -> DegreePartition
{
    auto n = g.vertex_count();
    vector<string> colours;
    for (auto & v : g.vertices())
        colours.push_back(v.colour);
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());

    vector<size_t> block_of(n);
    for (VertexIndex v = 0; v < n; ++v)
        block_of[v] = std::lower_bound(colours.begin(), colours.end(), g.vertex(v).colour) - colours.begin();
    size_t block_count = colours.size();

    while (true) {
        vector<std::pair<size_t, Signature>> keys(n);
        for (VertexIndex v = 0; v < n; ++v)
            keys[v] = {block_of[v], vertex_signature(g, block_of, v)};
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        vector<size_t> next(n);
        for (VertexIndex v = 0; v < n; ++v)
            next[v] = std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin();
        block_of = std::move(next);
        if (sorted.size() == block_count)
            break;
        block_count = sorted.size();
    }

    DegreePartition result;
    result.partition.block_of = block_of;
    result.partition.blocks.resize(block_count);
    for (VertexIndex v = 0; v < n; ++v)
        result.partition.blocks[block_of[v]].push_back(v);

    result.matrix.k = block_count;
    for (auto & block : result.partition.blocks) {
        auto i = block_of[block.front()];
        result.matrix.block_colours.push_back(g.vertex(block.front()).colour);
        for (auto & [colour, direction, j, count] : vertex_signature(g, block_of, block.front()))
            result.matrix.entries[{i, j, colour, direction}] = count;
    }
    return result;
}

auto coverkit::is_equitable(const Graph & g, const Partition & p) -> bool
{
    if (p.block_of.size() != g.vertex_count())
        return false;
    for (auto & block : p.blocks) {
        if (block.empty())
            return false;
        auto expected = vertex_signature(g, p.block_of, block.front());
        for (auto v : block)
            if (p.block_of[v] != p.block_of[block.front()] || g.vertex(v).colour != g.vertex(block.front()).colour
                || vertex_signature(g, p.block_of, v) != expected)
                return false;
    }
    return true;
}

auto coverkit::normalize_colours(const Graph & g, const Partition & p) -> Graph
{
    if (! is_equitable(g, p))
        throw GraphError("partition is not equitable for graph '" + g.name() + "'");

    auto name = [](size_t i) { return std::to_string(i + 1); };
    Graph result(g.name());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        result.add_vertex(g.vertex(v).id, "B" + name(p.block_of[v]));

    for (auto & e : g.edges()) {
        auto i = p.block_of[e.tail], j = p.block_of[e.head];
        if (i == j)
            result.add_edge(e.id, e.kind, e.colour + "@" + name(i), e.tail, e.head);
        else if (e.kind == EdgeKind::DirectedNormal)
            result.add_edge(e.id, EdgeKind::UndirectedNormal, e.colour + "@" + name(i) + ">" + name(j), e.tail, e.head);
        else
            result.add_edge(e.id, e.kind, e.colour + "@" + name(std::min(i, j)) + "-" + name(std::max(i, j)), e.tail, e.head);
    }
    return result;
}
