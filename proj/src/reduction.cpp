#include <coverkit/reduction.hpp>

#include <algorithm>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

namespace
{
    auto fresh_name(ReductionRecord & record, const string & prefix) -> string
    {
        string name;
        do
            name = prefix + "~" + std::to_string(record.next_id++);
        while (record.reserved.contains(name));
        record.reserved.insert(name);
        return name;
    }

    // length-prefixed, so colour names cannot be confused with the separators
    auto token(char tag, const string & text) -> string
    {
        return string(1, tag) + std::to_string(text.size()) + ":" + text;
    }

    auto edge_token(const Edge & e, bool forward) -> string
    {
        char direction = '-';
        if (e.kind == EdgeKind::DirectedNormal)
            direction = forward ? '>' : '<';
        return token('e', e.colour) + direction;
    }

    auto flip(string t) -> string
    {
        if (t.back() == '>')
            t.back() = '<';
        else if (t.back() == '<')
            t.back() = '>';
        return t;
    }

    auto join(const vector<string> & tokens) -> string
    {
        string result;
        for (auto & t : tokens)
            result += t;
        return result;
    }

    auto reversed(const vector<string> & tokens) -> vector<string>
    {
        vector<string> result;
        for (auto it = tokens.rbegin(); it != tokens.rend(); ++it)
            result.push_back(it->front() == 'e' ? flip(*it) : *it);
        return result;
    }

    class TreeCoder
    {
    private:
        const Graph & g;
        const vector<char> & removed;

    public:
        TreeCoder(const Graph & g, const vector<char> & removed) :
            g(g), removed(removed)
        {
        }

        auto code(VertexIndex v, optional<EdgeIndex> parent) const -> string
        {
            vector<string> children;
            for (auto e : g.incident(v)) {
                if (e == parent)
                    continue;
                auto & edge = g.edge(e);
                auto w = edge.other(v);
                if (! removed[w])
                    continue;
                children.push_back(edge_token(edge, edge.tail == v) + code(w, e));
            }
            std::sort(children.begin(), children.end());
            return "(" + token('v', g.vertex(v).colour) + join(children) + ")";
        }
    };

    auto prune_trees(const Graph & g, ReductionRecord & record) -> Graph
    {
        auto n = g.vertex_count();
        vector<size_t> deg(n, 0);
        vector<char> anchored(n, 0), removed(n, 0);
        for (auto & e : g.edges()) {
            if (e.kind == EdgeKind::UndirectedNormal || e.kind == EdgeKind::DirectedNormal) {
                ++deg[e.tail];
                ++deg[e.head];
            }
            else
                anchored[e.tail] = 1;
        }

        vector<VertexIndex> queue;
        for (VertexIndex v = 0; v < n; ++v)
            if (! anchored[v] && deg[v] == 1)
                queue.push_back(v);
        while (! queue.empty()) {
            auto v = queue.back();
            queue.pop_back();
            removed[v] = 1;
            for (auto e : g.incident(v)) {
                auto w = g.edge(e).other(v);
                if (removed[w])
                    continue;
                if (--deg[w] == 1 && ! anchored[w])
                    queue.push_back(w);
            }
        }

        TreeCoder coder(g, removed);
        Graph result(g.name());
        vector<VertexIndex> index(n, 0);
        for (VertexIndex v = 0; v < n; ++v) {
            if (removed[v])
                continue;
            bool has_tree = false;
            for (auto e : g.incident(v))
                if (removed[g.edge(e).other(v)])
                    has_tree = true;
            auto colour = has_tree ? record.colour_for_tree(coder.code(v, std::nullopt)) : g.vertex(v).colour;
            index[v] = result.add_vertex(g.vertex(v).id, colour);
        }
        for (auto & e : g.edges())
            if (! removed[e.tail] && ! removed[e.head])
                result.add_edge(e.id, e.kind, e.colour, index[e.tail], index[e.head]);
        return result;
    }

    struct Chain
    {
        VertexIndex start;
        optional<VertexIndex> end;
        vector<string> tokens;
        string semi_colour;
    };

    auto contract_chains(const Graph & g, ReductionRecord & record) -> Graph
    {
        auto n = g.vertex_count();
        vector<char> branch(n, 0);
        for (VertexIndex v = 0; v < n; ++v)
            branch[v] = total_degree(g, v) > 2;

        Graph result(g.name());
        vector<VertexIndex> index(n, 0);
        for (VertexIndex v = 0; v < n; ++v)
            if (branch[v])
                index[v] = result.add_vertex(g.vertex(v).id, g.vertex(v).colour);

        vector<char> used(g.edge_count(), 0);
        vector<Chain> chains;

        for (VertexIndex x = 0; x < n; ++x) {
            if (! branch[x])
                continue;
            for (auto first : g.incident(x)) {
                if (used[first])
                    continue;
                auto & edge = g.edge(first);
                auto y = edge.other(x);
                if (edge.tail == edge.head || branch[y]) {
                    used[first] = 1;
                    result.add_edge(edge.id, edge.kind, edge.colour, index[edge.tail], index[edge.head]);
                    continue;
                }

                Chain chain{x, std::nullopt, {edge_token(edge, edge.tail == x)}, ""};
                used[first] = 1;
                auto previous = first;
                auto current = y;
                while (true) {
                    chain.tokens.push_back(token('v', g.vertex(current).colour));
                    optional<EdgeIndex> next;
                    for (auto e : g.incident(current))
                        if (e != previous)
                            next = e;
                    if (! next || g.incident(current).size() != 2)
                        throw GraphError("inner chain vertex '" + g.vertex(current).id + "' does not have degree 2");
                    auto & step = g.edge(*next);
                    used[*next] = 1;
                    if (step.kind == EdgeKind::SemiEdge) {
                        chain.semi_colour = step.colour;
                        break;
                    }
                    if (step.tail == step.head)
                        throw GraphError("inner chain vertex '" + g.vertex(current).id + "' carries a loop");
                    chain.tokens.push_back(edge_token(step, step.tail == current));
                    auto w = step.other(current);
                    if (branch[w]) {
                        chain.end = w;
                        break;
                    }
                    previous = *next;
                    current = w;
                }
                chains.push_back(std::move(chain));
            }
        }

        for (auto & chain : chains) {
            if (! chain.end) {
                auto symmetric = chain.tokens;
                symmetric.push_back(token('e', chain.semi_colour) + "-");
                for (auto & t : reversed(chain.tokens))
                    symmetric.push_back(t);
                auto one_sided = join(chain.tokens) + token('s', chain.semi_colour);
                auto colour = record.colour_for_semi(one_sided, join(symmetric));
                result.add_edge(EdgeKind::SemiEdge, colour, index[chain.start], index[chain.start]);
                continue;
            }

            auto forward = join(chain.tokens);
            auto backward = join(reversed(chain.tokens));
            auto a = index[chain.start], b = index[*chain.end];
            if (forward == backward) {
                auto colour = record.colour_for_path(forward);
                result.add_edge(a == b ? EdgeKind::UndirectedLoop : EdgeKind::UndirectedNormal, colour, a, b);
            }
            else {
                auto colour = record.colour_for_path(std::min(forward, backward));
                if (a == b)
                    result.add_edge(EdgeKind::DirectedLoop, colour, a, a);
                else if (forward < backward)
                    result.add_edge(EdgeKind::DirectedNormal, colour, a, b);
                else
                    result.add_edge(EdgeKind::DirectedNormal, colour, b, a);
            }
        }
        return result;
    }
}

auto ReductionRecord::reserve_colours(const Graph & g) -> void
{
    for (auto & v : g.vertices())
        reserved.insert(v.colour);
    for (auto & e : g.edges())
        reserved.insert(e.colour);
}

auto ReductionRecord::colour_for_tree(const string & code) -> string
{
    auto it = tree_codes.find(code);
    if (it == tree_codes.end())
        it = tree_codes.emplace(code, fresh_name(*this, "tree")).first;
    return it->second;
}

auto ReductionRecord::colour_for_path(const string & pattern) -> string
{
    auto it = path_patterns.find(pattern);
    if (it == path_patterns.end())
        it = path_patterns.emplace(pattern, fresh_name(*this, "pat")).first;
    return it->second;
}

auto ReductionRecord::colour_for_semi(const string & one_sided, const string & symmetric) -> string
{
    auto colour = colour_for_path(symmetric);
    if (semi_patterns.emplace(one_sided, colour).second)
        identified.emplace_back(one_sided, symmetric);
    return colour;
}

auto ReductionRecord::to_json() const -> nlohmann::json
{
    auto pairs = nlohmann::json::array();
    for (auto & [a, b] : identified)
        pairs.push_back({a, b});
    return nlohmann::json{{"tree_codes", tree_codes}, {"path_patterns", path_patterns}, {"semi_patterns", semi_patterns}, {"identified", pairs}};
}

auto coverkit::degree_adjust(const Graph & g, ReductionRecord & record) -> Graph
{
    if (! is_connected(g))
        throw GraphError("the degree-adjusting reduction needs a connected graph");
    if (is_tree(g))
        throw GraphError("the degree-adjusting reduction is undefined for trees");
    record.reserve_colours(g);

    auto pruned = prune_trees(g, record);
    if (is_path_or_cycle(pruned))
        return pruned;
    return contract_chains(pruned, record);
}

auto coverkit::degree_adjust(const Graph & g) -> std::pair<Graph, ReductionRecord>
{
    ReductionRecord record;
    auto result = degree_adjust(g, record);
    return {std::move(result), std::move(record)};
}

auto coverkit::reduce_pair(const Graph & g, const Graph & h) -> ReducedPair
{
    ReductionRecord record;
    record.reserve_colours(g);
    record.reserve_colours(h);
    auto gr = degree_adjust(g, record);
    auto hr = degree_adjust(h, record);
    return ReducedPair{std::move(gr), std::move(hr), std::move(record)};
}
