#include <coverkit/graph.hpp>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

using namespace coverkit;

namespace
{
    auto tokenise(const string & line) -> vector<string>
    {
        auto hash = line.find('#');
        std::istringstream in(line.substr(0, hash));
        vector<string> tokens;
        string token;
        while (in >> token)
            tokens.push_back(token);
        return tokens;
    }

    auto kind_for(const string & directive) -> std::optional<EdgeKind>
    {
        if (directive == "edge")
            return EdgeKind::UndirectedNormal;
        if (directive == "arc")
            return EdgeKind::DirectedNormal;
        if (directive == "loop")
            return EdgeKind::UndirectedLoop;
        if (directive == "dloop")
            return EdgeKind::DirectedLoop;
        if (directive == "semi")
            return EdgeKind::SemiEdge;
        return std::nullopt;
    }
}

auto coverkit::parse_graph(const string & text) -> Graph
{
    std::istringstream in(text);
    std::optional<Graph> result;
    string line;
    int line_number = 0;

    while (std::getline(in, line)) {
        ++line_number;
        auto tokens = tokenise(line);
        if (tokens.empty())
            continue;

        auto & directive = tokens[0];
        if (directive == "graph") {
            if (result)
                throw ParseError(line_number, "repeated graph directive");
            if (tokens.size() != 2)
                throw ParseError(line_number, "expected 'graph <name>'");
            result.emplace(tokens[1]);
            continue;
        }

        if (! result)
            throw ParseError(line_number, "expected 'graph <name>' before '" + directive + "'");

        try {
            if (directive == "vertex") {
                if (tokens.size() != 3)
                    throw ParseError(line_number, "expected 'vertex <id> <colour>'");
                result->add_vertex(tokens[1], tokens[2]);
            }
            else if (auto kind = kind_for(directive)) {
                bool two_ends = *kind == EdgeKind::UndirectedNormal || *kind == EdgeKind::DirectedNormal;
                if (tokens.size() != (two_ends ? 5u : 4u))
                    throw ParseError(line_number, "expected '" + directive + " <id> <colour> " + (two_ends ? "<u> <v>'" : "<u>'"));
                auto endpoint = [&](const string & id) {
                    auto v = result->find_vertex(id);
                    if (! v)
                        throw ParseError(line_number, "dangling endpoint '" + id + "'");
                    return *v;
                };
                auto tail = endpoint(tokens[3]);
                auto head = two_ends ? endpoint(tokens[4]) : tail;
                result->add_edge(tokens[1], *kind, tokens[2], tail, head);
            }
            else
                throw ParseError(line_number, "unknown directive '" + directive + "'");
        }
        catch (const GraphError & e) {
            throw ParseError(line_number, e.what());
        }
    }

    if (! result)
        throw ParseError(line_number, "missing 'graph <name>' directive");
    return std::move(*result);
}

auto coverkit::serialize_graph(const Graph & g) -> string
{
    string result = "graph " + g.name() + "\n";
    for (auto & v : g.vertices())
        result += "vertex " + v.id + " " + v.colour + "\n";
    for (auto & e : g.edges()) {
        result += to_string(e.kind) + " " + e.id + " " + e.colour + " " + g.vertex(e.tail).id;
        if (e.kind == EdgeKind::UndirectedNormal || e.kind == EdgeKind::DirectedNormal)
            result += " " + g.vertex(e.head).id;
        result += "\n";
    }
    return result;
}

auto coverkit::read_graph_file(const string & path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw GraphError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}
