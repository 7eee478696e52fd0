#include <coverkit/classifier.hpp>
#include <coverkit/cover.hpp>
#include <coverkit/formula.hpp>
#include <coverkit/gadgets.hpp>
#include <coverkit/graph.hpp>
#include <coverkit/oracle.hpp>
#include <coverkit/partition.hpp>
#include <coverkit/random_graphs.hpp>
#include <coverkit/reduction.hpp>
#include <coverkit/solver.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using std::string;

using namespace coverkit;

namespace
{
    enum ExitCode
    {
        Success = 0,
        Negative = 1,
        Refused = 2,
        InputError = 3
    };

    struct InputFailure : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_text(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw InputFailure("cannot read '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_text(const string & path, const string & text) -> void
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (! out)
            throw InputFailure("cannot write '" + path + "'");
        out << text;
    }

    auto read_json(const string & path) -> json
    {
        try {
            return json::parse(read_text(path));
        }
        catch (const json::exception & e) {
            throw InputFailure("'" + path + "': " + e.what());
        }
    }

    auto default_budget() -> std::uint64_t
    {
        if (auto * text = std::getenv("COVERKIT_BUDGET")) {
            try {
                return std::stoull(text);
            }
            catch (const std::exception &) {
                throw InputFailure("COVERKIT_BUDGET is not a number");
            }
        }
        return default_oracle_budget;
    }

    struct Options
    {
        bool pretty = false;
        std::optional<std::uint64_t> budget;
        std::uint64_t seed = 1;
        string certificate, trace, output;

        string first, second, third;
        string gadget, formula_path, gadget_case = "C0", kind = "bipartite";
        std::size_t c = 3, k = 1, b = 1, m = 4, clauses = 4, occurrences = 0;
    };

    auto emit(const Options & options, const json & j, const string & summary) -> void
    {
        if (options.pretty)
            std::cout << summary << '\n';
        else
            std::cout << j.dump(2) << '\n';
    }

    auto run_classify(const Options & options) -> int
    {
        auto h = read_graph_file(options.first);
        auto v = verdict(h);
        std::ostringstream summary;
        summary << h.name() << ": " << to_string(v.kind);
        if (! v.reason.empty())
            summary << " (" << v.reason << ")";
        for (auto & shape : v.shapes)
            summary << "\n  block " << shape.block + 1 << (shape.other_block ? "-" + std::to_string(*shape.other_block + 1) : string()) << " colour "
                    << shape.colour << ": " << shape.shape.to_string() << " " << to_string(shape.shape_class);
        emit(options, v.to_json(), summary.str());
        return v.kind == VerdictKind::Unsupported ? Refused : Success;
    }

    auto run_solve(const Options & options) -> int
    {
        auto g = read_graph_file(options.first);
        auto h = read_graph_file(options.second);
        auto result = solve_cover(g, h);
        json out{{"status", to_string(result.status)}};
        if (! result.reason.empty())
            out["reason"] = result.reason;
        if (result.projection) {
            auto certificate = projection_to_json(g, h, *result.projection);
            out["certificate"] = certificate;
            if (! options.certificate.empty())
                write_text(options.certificate, certificate.dump(2) + "\n");
        }
        if (! options.trace.empty())
            write_text(options.trace, result.trace.to_json(g).dump(2) + "\n");
        emit(options, out, to_string(result.status) + (result.reason.empty() ? "" : ": " + result.reason));
        switch (result.status) {
        case SolveStatus::Covers: return Success;
        case SolveStatus::DoesNotCover: return Negative;
        case SolveStatus::Refused: return Refused;
        }
        return Refused;
    }

    auto run_oracle(const Options & options) -> int
    {
        auto g = read_graph_file(options.first);
        auto h = read_graph_file(options.second);
        auto result = oracle_cover(g, h, options.budget.value_or(default_budget()));
        json out{{"status", to_string(result.status)}, {"nodes", result.nodes}};
        if (result.projection) {
            auto certificate = projection_to_json(g, h, *result.projection);
            out["certificate"] = certificate;
            if (! options.certificate.empty())
                write_text(options.certificate, certificate.dump(2) + "\n");
        }
        emit(options, out, to_string(result.status) + " after " + std::to_string(result.nodes) + " nodes");
        switch (result.status) {
        case OracleStatus::Found: return Success;
        case OracleStatus::NotFound: return Negative;
        case OracleStatus::Unknown: return Refused;
        }
        return Refused;
    }

    auto run_verify(const Options & options) -> int
    {
        auto g = read_graph_file(options.first);
        auto h = read_graph_file(options.second);
        auto f = projection_from_json(g, h, read_json(options.third));
        auto result = verify_cover(g, h, f);
        std::ostringstream summary;
        summary << (result.valid() ? "valid covering projection" : "not a covering projection");
        for (auto & violation : result.violations)
            summary << "\n  " << to_string(violation.kind) << ": " << violation.message;
        emit(options, result.to_json(), summary.str());
        return result.valid() ? Success : Negative;
    }

    auto partition_json(const Graph & g, const DegreePartition & dp) -> json
    {
        auto blocks = json::array();
        for (auto & block : dp.partition.blocks) {
            auto ids = json::array();
            for (auto v : block)
                ids.push_back(g.vertex(v).id);
            blocks.push_back(ids);
        }
        auto entries = json::array();
        for (auto & [key, count] : dp.matrix.entries) {
            auto & [i, j, colour, direction] = key;
            entries.push_back({{"from", i + 1}, {"to", j + 1}, {"colour", colour}, {"direction", to_string(direction)}, {"count", count}});
        }
        return {{"blocks", blocks}, {"block_colours", dp.matrix.block_colours}, {"matrix", entries}};
    }

    auto run_partition(const Options & options) -> int
    {
        auto g = read_graph_file(options.first);
        auto dp = degree_partition(g);
        std::ostringstream summary;
        for (std::size_t i = 0; i < dp.partition.size(); ++i) {
            summary << "B" << i + 1 << ":";
            for (auto v : dp.partition.blocks[i])
                summary << " " << g.vertex(v).id;
            summary << "\n";
        }
        emit(options, partition_json(g, dp), summary.str());
        return Success;
    }

    auto run_reduce(const Options & options) -> int
    {
        auto g = read_graph_file(options.first);
        json out;
        string text;
        if (options.second.empty()) {
            auto [reduced, record] = degree_adjust(g);
            text = serialize_graph(reduced);
            out = {{"g", text}, {"record", record.to_json()}};
        }
        else {
            auto pair = reduce_pair(g, read_graph_file(options.second));
            text = serialize_graph(pair.g);
            out = {{"g", text}, {"h", serialize_graph(pair.h)}, {"record", pair.record.to_json()}};
        }
        if (! options.output.empty())
            write_text(options.output, text);
        emit(options, out, text);
        return Success;
    }

    auto gadget_case_of(const string & name) -> GadgetCase
    {
        for (auto c : {GadgetCase::C0, GadgetCase::Ck, GadgetCase::Dk, GadgetCase::B1})
            if (to_string(c) == name)
                return c;
        throw InputFailure("unknown gadget case '" + name + "' (expected C0, Ck, Dk or B1)");
    }

    auto load_formula(const Options & options, std::size_t c, std::size_t occurrences) -> Formula
    {
        if (! options.formula_path.empty())
            return formula_from_json(read_json(options.formula_path));
        return random_formula(c, options.clauses, occurrences, options.seed);
    }

    auto run_gen(const Options & options) -> int
    {
        auto & name = options.gadget;
        std::optional<Graph> graph;
        if (name == "tripod")
            graph = limping_tripod();
        else if (name == "fw-target")
            graph = fw_target(options.c);
        else if (name == "wd-target")
            graph = wd_target(options.b, options.c);
        else if (name == "gphi")
            graph = build_gphi_fw(options.c, load_formula(options, options.c, options.c));
        else if (name == "directed-lift") {
            if (options.first.empty())
                throw InputFailure("directed-lift needs --graph");
            graph = directed_lift_wd(read_graph_file(options.first), options.b, options.c);
        }
        else if (name == "gadget-target")
            graph = gadget_target(gadget_case_of(options.gadget_case), options.k);
        else if (name == "variable-gadget")
            graph = variable_gadget(gadget_case_of(options.gadget_case), options.k).graph;
        else if (name == "claim-a") {
            auto gadget = variable_gadget(gadget_case_of(options.gadget_case), options.k);
            graph = compose_claim_a(gadget, load_formula(options, 2, gadget.ports.size()));
        }
        else if (name == "regular") {
            RegularKind kind;
            if (options.kind == "bipartite")
                kind = RegularKind::Bipartite;
            else if (options.kind == "even")
                kind = RegularKind::Even;
            else if (options.kind == "directed")
                kind = RegularKind::Directed;
            else
                throw InputFailure("unknown regular kind '" + options.kind + "'");
            graph = random_regular(kind, options.k, options.m, options.seed).graph;
        }
        else if (name == "formula") {
            auto f = random_formula(options.c, options.clauses, options.occurrences ? options.occurrences : options.c, options.seed);
            write_text(options.output, f.to_json().dump(2) + "\n");
            return Success;
        }
        else
            throw InputFailure("unknown generator '" + name + "'");
        write_text(options.output, serialize_graph(*graph));
        return Success;
    }

    auto dot_quote(const string & text) -> string
    {
        string result = "\"";
        for (auto ch : text) {
            if (ch == '"')
                result += '\\';
            result += ch;
        }
        return result + "\"";
    }

    auto run_dot(const Options & options) -> int
    {
        auto g = read_graph_file(options.first);
        std::ostringstream out;
        out << "digraph " << dot_quote(g.name()) << " {\n";
        for (auto & v : g.vertices())
            out << "  " << dot_quote(v.id) << " [label=" << dot_quote(v.id + "\\n" + v.colour) << "];\n";
        std::size_t stubs = 0;
        for (auto & e : g.edges()) {
            auto tail = dot_quote(g.vertex(e.tail).id), head = dot_quote(g.vertex(e.head).id);
            auto label = "label=" + dot_quote(e.colour);
            switch (e.kind) {
            case EdgeKind::UndirectedNormal:
            case EdgeKind::UndirectedLoop: out << "  " << tail << " -> " << head << " [dir=none, " << label << "];\n"; break;
            case EdgeKind::DirectedNormal:
            case EdgeKind::DirectedLoop: out << "  " << tail << " -> " << head << " [" << label << "];\n"; break;
            case EdgeKind::SemiEdge: {
                auto stub = dot_quote("__stub" + std::to_string(stubs++));
                out << "  " << stub << " [shape=point, style=invis];\n";
                out << "  " << tail << " -> " << stub << " [dir=none, " << label << "];\n";
                break;
            }
            }
        }
        out << "}\n";
        write_text(options.output, out.str());
        return Success;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Decide, certify and generate graph covers onto targets with blocks of at most two vertices"};
    app.require_subcommand(1);
    app.fallthrough();
    Options options;
    app.add_flag("--pretty", options.pretty, "Human-readable summary instead of JSON");

    auto graph_argument = [&](CLI::App * command, string & target, const string & name, bool required = true) {
        auto * option = command->add_option(name, target, name + " graph file");
        if (required)
            option->required();
    };

    auto * classify = app.add_subcommand("classify", "Classify the block graphs of a target and give the complexity verdict");
    graph_argument(classify, options.first, "H");

    auto * solve = app.add_subcommand("solve", "Decide whether G covers H with the polynomial algorithm");
    graph_argument(solve, options.first, "G");
    graph_argument(solve, options.second, "H");
    solve->add_option("--certificate", options.certificate, "Write the covering projection as JSON");
    solve->add_option("--trace", options.trace, "Write the solver trace as JSON");

    auto * oracle = app.add_subcommand("oracle", "Decide whether G covers H by exhaustive search");
    graph_argument(oracle, options.first, "G");
    graph_argument(oracle, options.second, "H");
    oracle->add_option("--budget", options.budget, "Search node limit (default: COVERKIT_BUDGET or built-in)");
    oracle->add_option("--certificate", options.certificate, "Write the covering projection as JSON");

    auto * verify = app.add_subcommand("verify", "Check a covering projection given as JSON");
    graph_argument(verify, options.first, "G");
    graph_argument(verify, options.second, "H");
    verify->add_option("MAP", options.third, "Projection JSON file")->required();

    auto * partition = app.add_subcommand("partition", "Degree partition and refinement matrix");
    graph_argument(partition, options.first, "G");

    auto * reduce = app.add_subcommand("reduce", "Degree-adjusting reduction of G, or of the pair G, H");
    graph_argument(reduce, options.first, "G");
    graph_argument(reduce, options.second, "H", false);
    reduce->add_option("-o,--output", options.output, "Write the reduced G here");

    auto * gen = app.add_subcommand("gen", "Generate hardness gadgets, targets, regular graphs and formulas");
    gen->add_option("gadget", options.gadget,
           "tripod, fw-target, wd-target, gphi, directed-lift, gadget-target, variable-gadget, claim-a, regular or formula")
        ->required();
    gen->add_option("--c", options.c, "Parameter c");
    gen->add_option("--b", options.b, "Parameter b");
    gen->add_option("--k", options.k, "Parameter k");
    gen->add_option("--m", options.m, "Parameter m of regular graphs");
    gen->add_option("--case", options.gadget_case, "Gadget case: C0, Ck, Dk or B1");
    gen->add_option("--kind", options.kind, "Regular graph kind: bipartite, even or directed");
    gen->add_option("--formula", options.formula_path, "Formula JSON; a random one is drawn otherwise");
    gen->add_option("--clauses", options.clauses, "Clause count of random formulas");
    gen->add_option("--occurrences", options.occurrences, "Occurrences per variable of random formulas (default c)");
    gen->add_option("--graph", options.first, "Input graph of directed-lift");
    gen->add_option("--seed", options.seed, "Random seed");
    gen->add_option("-o,--output", options.output, "Output file");

    auto * dot = app.add_subcommand("dot", "Render a graph in DOT");
    graph_argument(dot, options.first, "G");
    dot->add_option("-o,--output", options.output, "Output file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return InputError;
    }

    try {
        if (classify->parsed())
            return run_classify(options);
        if (solve->parsed())
            return run_solve(options);
        if (oracle->parsed())
            return run_oracle(options);
        if (verify->parsed())
            return run_verify(options);
        if (partition->parsed())
            return run_partition(options);
        if (reduce->parsed())
            return run_reduce(options);
        if (gen->parsed())
            return run_gen(options);
        if (dot->parsed())
            return run_dot(options);
    }
    catch (const ParseError & e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
        return InputError;
    }
    catch (const InputFailure & e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
    catch (const GraphError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
    catch (const json::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
    return InputError;
}
