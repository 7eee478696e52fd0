#include <coverkit/classifier.hpp>
#include <coverkit/reduction.hpp>

#include <algorithm>
#include <map>

using std::size_t;
using std::string;
using std::vector;

using namespace coverkit;

namespace
{
    auto family_name(ShapeFamily family) -> string
    {
        switch (family) {
        case ShapeFamily::F: return "F";
        case ShapeFamily::FD: return "FD";
        case ShapeFamily::W: return "W";
        case ShapeFamily::WD: return "WD";
        case ShapeFamily::FF: return "FF";
        case ShapeFamily::FW: return "FW";
        case ShapeFamily::WW: return "WW";
        }
        throw GraphError("unknown shape family");
    }

    auto arity(ShapeFamily family) -> size_t
    {
        switch (family) {
        case ShapeFamily::F: return 2;
        case ShapeFamily::FD: return 1;
        case ShapeFamily::W: return 5;
        case ShapeFamily::WD: return 3;
        case ShapeFamily::FF: return 1;
        case ShapeFamily::FW: return 1;
        case ShapeFamily::WW: return 2;
        }
        throw GraphError("unknown shape family");
    }

    // an F(b,c) part of a disconnected W
    auto harmful_f(size_t b, size_t c) -> bool
    {
        return b >= 2 && b + c >= 3;
    }
}

auto SmallShape::to_string() const -> string
{
    string result = family_name(family) + "(";
    for (size_t i = 0; i < parameters.size(); ++i)
        result += (i ? "," : "") + std::to_string(parameters[i]);
    return result + ")";
}

auto coverkit::make_shape(ShapeFamily family, vector<size_t> parameters) -> SmallShape
{
    if (parameters.size() != arity(family))
        throw GraphError(family_name(family) + " takes " + std::to_string(arity(family)) + " parameters");
    switch (family) {
    case ShapeFamily::W: {
        auto & q = parameters;
        if (q[0] + 2 * q[1] != 2 * q[3] + q[4])
            throw GraphError("W shapes need k+2m = 2p+q");
        vector<size_t> flipped{q[4], q[3], q[2], q[1], q[0]};
        parameters = std::max(parameters, flipped);
        break;
    }
    case ShapeFamily::WD:
        if (parameters[0] != parameters[2])
            throw GraphError("WD shapes need equal loop counts");
        break;
    case ShapeFamily::WW: std::sort(parameters.begin(), parameters.end()); break;
    default: break;
    }
    return SmallShape{family, std::move(parameters)};
}

auto coverkit::to_string(ShapeClass c) -> string
{
    switch (c) {
    case ShapeClass::Harmless: return "harmless";
    case ShapeClass::Dangerous: return "dangerous";
    case ShapeClass::Harmful: return "harmful";
    }
    throw GraphError("unknown shape class");
}

auto coverkit::classify_shape(const SmallShape & s) -> ShapeClass
{
    auto & p = s.parameters;
    switch (s.family) {
    case ShapeFamily::F: return harmful_f(p[0], p[1]) ? ShapeClass::Harmful : ShapeClass::Harmless;
    case ShapeFamily::FD: return ShapeClass::Harmless;
    case ShapeFamily::W: {
        auto k = p[0], m = p[1], l = p[2], pp = p[3], q = p[4];
        if (l == 0)
            return harmful_f(k, m) || harmful_f(q, pp) ? ShapeClass::Harmful : ShapeClass::Harmless;
        // W(0,0,l,0,0) is harmless for every l, so a harmful W needs a semi-edge or loop
        if (k + 2 * m >= 1 && k + 2 * m + l >= 3)
            return ShapeClass::Harmful;
        return ShapeClass::Harmless;
    }
    case ShapeFamily::WD: {
        auto c = p[0], b = p[1];
        return b >= 1 && c >= 1 && b + c >= 3 ? ShapeClass::Harmful : ShapeClass::Harmless;
    }
    case ShapeFamily::FF: return ShapeClass::Harmless;
    case ShapeFamily::FW:
        if (p[0] <= 1)
            return ShapeClass::Harmless;
        return p[0] == 2 ? ShapeClass::Dangerous : ShapeClass::Harmful;
    case ShapeFamily::WW: return p[0] >= 1 && p[1] >= 1 && p[0] + p[1] >= 3 ? ShapeClass::Harmful : ShapeClass::Harmless;
    }
    throw GraphError("unknown shape family");
}

auto coverkit::recognize_shape(const Graph & g, const vector<vector<VertexIndex>> & blocks, const string & colour) -> SmallShape
{
    if (blocks.empty() || blocks.size() > 2)
        throw GraphError("a block graph spans one or two blocks");
    for (auto & b : blocks)
        if (b.empty() || b.size() > 2)
            throw GraphError("shape recognition needs blocks of one or two vertices");

    auto use = g.colour_use(colour);
    bool directed = use == Graph::ColourUse::DirectedEdge;
    std::map<std::pair<VertexIndex, VertexIndex>, size_t> between;
    std::map<std::pair<VertexIndex, EdgeKind>, size_t> at;
    for (auto & e : g.edges()) {
        if (e.colour != colour)
            continue;
        if (e.tail == e.head)
            ++at[{e.tail, e.kind}];
        else
            ++between[{e.tail, e.head}];
    }
    auto count_between = [&](VertexIndex a, VertexIndex b) { return between[{a, b}] + between[{b, a}]; };

    if (blocks.size() == 1) {
        auto & b = blocks[0];
        if (b.size() == 1) {
            auto v = b[0];
            if (directed)
                return make_shape(ShapeFamily::FD, {at[{v, EdgeKind::DirectedLoop}]});
            return make_shape(ShapeFamily::F, {at[{v, EdgeKind::SemiEdge}], at[{v, EdgeKind::UndirectedLoop}]});
        }
        auto r = b[0], s = b[1];
        if (directed) {
            auto m1 = at[{r, EdgeKind::DirectedLoop}], m2 = at[{s, EdgeKind::DirectedLoop}];
            auto forward = between[{r, s}], backward = between[{s, r}];
            if (m1 != m2 || forward != backward)
                throw GraphError("uniblock graph of colour '" + colour + "' is not regular");
            return make_shape(ShapeFamily::WD, {m1, forward, m2});
        }
        vector<size_t> w{at[{r, EdgeKind::SemiEdge}], at[{r, EdgeKind::UndirectedLoop}], count_between(r, s), at[{s, EdgeKind::UndirectedLoop}],
            at[{s, EdgeKind::SemiEdge}]};
        if (w[0] + 2 * w[1] != 2 * w[3] + w[4])
            throw GraphError("uniblock graph of colour '" + colour + "' is not regular");
        return make_shape(ShapeFamily::W, w);
    }

    auto a = blocks[0], b = blocks[1];
    if (a.size() > b.size())
        std::swap(a, b);
    if (a.size() == 1 && b.size() == 1)
        return make_shape(ShapeFamily::FF, {count_between(a[0], b[0])});
    if (a.size() == 1) {
        auto x = count_between(a[0], b[0]), y = count_between(a[0], b[1]);
        if (x != y)
            throw GraphError("interblock graph of colour '" + colour + "' is not equitable");
        return make_shape(ShapeFamily::FW, {x});
    }
    auto x = count_between(a[0], b[0]), y = count_between(a[0], b[1]);
    auto z = count_between(a[1], b[0]), w = count_between(a[1], b[1]);
    if (x != w || y != z)
        throw GraphError("interblock graph of colour '" + colour + "' is not equitable");
    return make_shape(ShapeFamily::WW, {x, y});
}

auto BlockGraphShape::to_json() const -> nlohmann::json
{
    auto blocks = nlohmann::json::array({block + 1});
    if (other_block)
        blocks.push_back(*other_block + 1);
    return nlohmann::json{{"blocks", blocks}, {"colour", colour}, {"shape", shape.to_string()}, {"class", coverkit::to_string(shape_class)}};
}

auto coverkit::block_graph_shapes(const Graph & h, const Partition & p) -> vector<BlockGraphShape>
{
    for (auto & block : p.blocks)
        if (block.size() > 2)
            throw GraphError("block graph shapes need blocks of at most 2 vertices");

    auto normal = normalize_colours(h, p);
    std::map<string, std::pair<size_t, size_t>> span;
    for (auto & e : normal.edges()) {
        auto i = p.block_of[e.tail], j = p.block_of[e.head];
        span.emplace(e.colour, std::pair{std::min(i, j), std::max(i, j)});
    }

    vector<BlockGraphShape> result;
    for (auto & [colour, blocks] : span) {
        auto [i, j] = blocks;
        vector<vector<VertexIndex>> involved{p.blocks[i]};
        if (j != i)
            involved.push_back(p.blocks[j]);
        auto shape = recognize_shape(normal, involved, colour);
        result.push_back(BlockGraphShape{i, j != i ? std::optional<size_t>(j) : std::nullopt, colour, shape, classify_shape(shape)});
    }
    return result;
}

auto coverkit::to_string(VerdictKind kind) -> string
{
    switch (kind) {
    case VerdictKind::Polynomial: return "Polynomial";
    case VerdictKind::NPCompleteForSimpleInputs: return "NPCompleteForSimpleInputs";
    case VerdictKind::Unsupported: return "Unsupported";
    }
    throw GraphError("unknown verdict");
}

auto Verdict::to_json() const -> nlohmann::json
{
    auto list = nlohmann::json::array();
    for (auto & s : shapes)
        list.push_back(s.to_json());
    nlohmann::json result{{"verdict", coverkit::to_string(kind)}, {"reason", reason}, {"shapes", list}};
    result["witness"] = witness ? witness->to_json() : nlohmann::json();
    return result;
}

auto coverkit::verdict(const Graph & h) -> Verdict
{
    if (! is_connected(h))
        throw GraphError("the verdict needs a connected target graph");
    if (is_tree(h))
        return Verdict{VerdictKind::Polynomial, "the target is a tree", {}, std::nullopt};
    if (is_path_or_cycle(h))
        return Verdict{VerdictKind::Polynomial, "the target is a path or a cycle", {}, std::nullopt};

    auto [reduced, record] = degree_adjust(h);
    if (is_path_or_cycle(reduced))
        return Verdict{VerdictKind::Polynomial, "the reduced target is a path or a cycle", {}, std::nullopt};

    auto dp = degree_partition(reduced);
    for (auto & block : dp.partition.blocks)
        if (block.size() > 2)
            return Verdict{VerdictKind::Unsupported, "a block of the reduced target has " + std::to_string(block.size()) + " vertices", {},
                std::nullopt};

    Verdict result{VerdictKind::Polynomial, "every block graph is harmless", block_graph_shapes(reduced, dp.partition), std::nullopt};
    for (auto wanted : {ShapeClass::Harmful, ShapeClass::Dangerous})
        for (auto & s : result.shapes)
            if (s.shape_class == wanted && ! result.witness) {
                result.kind = VerdictKind::NPCompleteForSimpleInputs;
                result.reason = "block graph " + s.shape.to_string() + " of colour '" + s.colour + "' is " + coverkit::to_string(wanted);
                result.witness = s;
            }
    return result;
}
