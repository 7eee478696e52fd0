#include "reference.hpp"

#include <coverkit/graph.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace coverkit;

namespace
{
    struct Run
    {
        int code;
        std::string out;
    };

    auto scratch() -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / "coverkit-cli-test";
        std::filesystem::create_directories(dir);
        return dir;
    }

    auto write(const std::string & name, const std::string & text) -> std::string
    {
        auto path = scratch() / name;
        std::ofstream(path) << text;
        return path.string();
    }

    auto run(const std::string & args) -> Run
    {
        auto out = (scratch() / "stdout.txt").string();
        auto status = std::system((std::string(COVERKIT_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null").c_str());
        std::ifstream in(out);
        std::stringstream text;
        text << in.rdbuf();
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
    }
}

TEST_CASE("cli: solve writes a certificate that verify accepts")
{
    auto c6 = write("c6.graph", serialize_graph(reference::cycle(6)));
    auto w2 = write("w2.graph", serialize_graph(reference::w_graph(0, 0, 2, 0, 0)));
    auto cert = (scratch() / "cert.json").string();
    auto solved = run("solve " + c6 + " " + w2 + " --certificate " + cert);
    CHECK(solved.code == 0);
    CHECK(nlohmann::json::parse(solved.out).is_object());
    CHECK(run("verify " + c6 + " " + w2 + " " + cert).code == 0);

    // corrupt the certificate: every vertex onto r
    auto j = nlohmann::json::parse(std::ifstream(cert));
    for (auto & [key, value] : j["fv"].items())
        value = "r";
    std::ofstream(cert) << j.dump();
    CHECK(run("verify " + c6 + " " + w2 + " " + cert).code == 1);

    auto c5 = write("c5.graph", serialize_graph(reference::cycle(5)));
    CHECK(run("solve " + c5 + " " + w2).code == 1);
}

TEST_CASE("cli: classify, oracle and refusals")
{
    auto f30 = write("f30.graph", serialize_graph(reference::f_graph(3, 0)));
    auto classified = run("classify " + f30);
    CHECK(classified.code == 0);
    CHECK(classified.out.find("NPCompleteForSimpleInputs") != std::string::npos);

    auto k4 = write("k4.graph", serialize_graph(reference::complete(4)));
    CHECK(run("solve " + k4 + " " + f30).code == 2);
    auto f11 = write("f11.graph", serialize_graph(reference::f_graph(1, 1)));
    CHECK(run("oracle " + k4 + " " + f11).code == 0);
    auto c3 = write("c3.graph", serialize_graph(reference::cycle(3)));
    auto f20 = write("f20.graph", serialize_graph(reference::f_graph(2, 0)));
    CHECK(run("oracle " + c3 + " " + f20).code == 1);
}

TEST_CASE("cli: input errors")
{
    auto broken = write("broken.graph", "graph g\nvertex 1 black\narc e1 red 1 1\n");
    CHECK(run("partition " + broken).code == 3);
    CHECK(run("partition /nonexistent/file.graph").code == 3);
    CHECK(run("frobnicate").code == 3);
}

TEST_CASE("cli: partition, reduce, gen and dot")
{
    auto c6 = write("c6.graph", serialize_graph(reference::cycle(6)));
    auto part = run("partition " + c6);
    CHECK(part.code == 0);
    CHECK(nlohmann::json::parse(part.out).is_object());
    CHECK(run("reduce " + c6).code == 0);

    auto tripod = (scratch() / "tripod.graph").string();
    CHECK(run("gen tripod -o " + tripod).code == 0);
    CHECK(read_graph_file(tripod).vertex_count() == 7);

    auto f20 = write("f20.graph", serialize_graph(reference::f_graph(2, 0)));
    auto dot = run("dot " + f20);
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("__stub") != std::string::npos);
}
