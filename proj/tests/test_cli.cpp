#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "cli.hpp"
#include "pathset/pathset.hpp"
#include "support/test_support.hpp"

using namespace pathset;
using namespace pathset::testing;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

std::string fixture(const std::string& name) { return std::string(PATHSET_FIXTURE_DIR) + "/" + name; }

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("documented examples") {
    CHECK(run({"dim", fixture("sigma3_01.json")}).out == "{\"spectral_radius\": 2.0, \"dimension\": 0.630929753571}\n");

    const Result sum = run({"add", "-r", "2", fixture("sigma3_01.json")});
    REQUIRE(sum.code == 0);
    const Result eq = run({"eq", "-", fixture("sigma3_01_plus_2.json")}, sum.out);
    CHECK(eq.code == 0);
    CHECK(eq.out == "true\n");
    CHECK(run({"eq", fixture("sigma3_01.json"), fixture("sigma3_01_plus_2.json")}).out == "false\n");

    CHECK(run({"expand", "-p", "3", "-r", "-1"}).out == "{\"preperiod\": [], \"period\": [2]}\n");
    CHECK(run({"expand", "-p", "3", "-r", "1/4"}).out == "{\"preperiod\": [1], \"period\": [2, 0]}\n");
}

TEST_CASE("set-valued verbs compose through stdin") {
    const Result quarter = run({"mul", "--r", "1/4", fixture("sigma3_01.json")});
    REQUIRE(quarter.code == 0);
    CHECK(run({"eq", "-", fixture("sigma3_01_quarter.json")}, quarter.out).out == "true\n");
    CHECK(run({"eq", "-", fixture("sigma3_01_quarter_bad_edge.json")}, quarter.out).out == "false\n");

    const Result both = run({"intersect", fixture("sigma3_01.json"), "-"}, quarter.out);
    REQUIRE(both.code == 0);
    CHECK(run({"eq", "-", fixture("sigma3_01_meet_quarter.json")}, both.out).out == "true\n");
    CHECK(run({"dim", "-"}, both.out).out == "{\"spectral_radius\": 1.61803398875, \"dimension\": 0.438017879486}\n");

    CHECK(run({"eq", "-", fixture("sigma5_012.json")},
              run({"sum", fixture("sigma5_01.json"), fixture("sigma5_01.json")}).out)
              .out == "true\n");
    const Result raw = run({"sum", "--raw", fixture("sigma5_01.json"), fixture("sigma5_04.json")});
    REQUIRE(raw.code == 0);
    CHECK(run({"check", "--op", "sum", "--in", fixture("sigma5_01.json"), "--in", fixture("sigma5_04.json"), "--out",
               "-", "-n", "5"},
              raw.out)
              .out == "true\n");
    CHECK(run({"eq", "-", fixture("sigma5_01.json")}, run({"union", fixture("sigma5_01.json"), fixture("sigma5_01.json")}).out)
              .out == "true\n");
    CHECK(run({"eq", "-", fixture("sigma3_01.json")}, run({"shift", fixture("sigma3_01.json")}).out).out == "true\n");
    CHECK(run({"eq", "-", fixture("sigma3_01.json")}, run({"decimate", "-j", "0", "-m", "2", fixture("sigma3_01.json")}).out)
              .out == "true\n");
    CHECK(run({"eq", "-", fixture("sigma3_01_plus_2.json")}, run({"split", fixture("sigma3_01_plus_2.json")}).out).out == "true\n");
}

TEST_CASE("scalar verbs") {
    CHECK(run({"prefixes", "-n", "2", "--values", fixture("sigma3_01.json")}).out == "[0, 1, 3, 4]\n");
    CHECK(run({"count", "-n", "5", fixture("sigma3_01_meet_quarter.json")}).out == "13\n");
    CHECK(run({"check", "--op", "add", "-r", "2", "--in", fixture("sigma3_01.json"), "--out", fixture("sigma3_01_plus_2.json"), "-n", "6"})
              .out == "true\n");
    CHECK(run({"check", "--op", "sum", "--in", fixture("sigma5_01.json"), "--in", fixture("sigma5_01.json"), "--out",
               fixture("sigma5_012.json"), "-n", "5"})
              .out == "true\n");
    CHECK(run({"check", "--op", "mul", "-r", "1/4", "--in", fixture("sigma3_01.json"), "--out", fixture("sigma3_01_quarter_bad_edge.json"),
               "-n", "6"})
              .out == "false\n");
    CHECK(run({"validate", fixture("sigma3_01.json")}).out ==
          "{\"right_resolving\": true, \"reachable\": true, \"injective_digit_map\": true, "
          "\"all_vertices_have_exit\": true, \"offending_items\": []}\n");
    const Result minus_two = run({"singleton", "-"}, run({"expand", "-p", "5", "-r", "-2/7", "--presentation"}).out);
    CHECK(minus_two.out == "{\"rational\": \"-2/7\"}\n");
    const Result per_vertex = run({"dim", "--per-vertex", "--json", fixture("sigma3_01_plus_2.json")});
    CHECK(per_vertex.out.find("\"per_vertex\"") != std::string::npos);
    CHECK(per_vertex.out.find("\"sccs\"") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with a JSON payload") {
    const Result not_integral = run({"add", "-r", "1/3", fixture("sigma3_01.json")});
    CHECK(not_integral.code == 1);
    const auto payload = nlohmann::json::parse(not_integral.out);
    CHECK(payload.at("error") == "NotPIntegral");
    CHECK(payload.contains("detail"));

    CHECK(nlohmann::json::parse(run({"singleton", fixture("sigma3_01.json")}).out).at("error") == "NotSingleton");
    CHECK(nlohmann::json::parse(run({"sum", fixture("sigma3_01.json"), fixture("sigma5_01.json")}).out).at("error") ==
          "PMismatch");
    CHECK(nlohmann::json::parse(run({"mul", "-r", "1/3", fixture("sigma3_01.json")}).out).at("error") == "NotPIntegral");
    const Result empty = run({"dim", "-"}, run({"intersect", fixture("sigma5_01.json"), "-"},
                                                presentation_to_string(digit_set_presentation(5, {2, 3})))
                                                .out);
    CHECK(empty.code == 1);
    CHECK(nlohmann::json::parse(empty.out).at("error") == "EmptySet");
    const Result too_big = run({"prefixes", "-n", "40", fixture("sigma5_0123.json")});
    CHECK(too_big.code == 1);
    CHECK(nlohmann::json::parse(too_big.out).at("error") == "EnumerationTooLarge");
    const Result broken = run({"validate", "-"}, R"({"p": 4, "start": 0, "vertices": [0], "edges": []})");
    CHECK(broken.code == 1);
    CHECK(nlohmann::json::parse(broken.out).at("error") == "StructuralError");
    const Result garbled = run({"dim", "-"}, "{not json");
    CHECK(garbled.code == 1);
    CHECK(nlohmann::json::parse(garbled.out).at("error") == "StructuralError");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"add", fixture("sigma3_01.json")}).code == 2);
    CHECK(run({"add", "-r", "one", fixture("sigma3_01.json")}).code == 2);
    CHECK(run({"dim", fixture("does-not-exist.json")}).code == 2);
    CHECK(run({"eq", "-", "-"}, read_file(fixture("sigma3_01.json"))).code == 2);
    const Result usage = run({"decimate", "-j", "0", fixture("sigma3_01.json")});
    CHECK(usage.code == 2);
    CHECK(usage.out.empty());
    CHECK_FALSE(usage.err.empty());
}

TEST_CASE("output is reproducible and round-trips") {
    const std::vector<std::vector<std::string>> verbs = {
        {"standardize", fixture("sigma3_01_plus_2.json")},
        {"add", "-r", "-3/5", fixture("sigma3_01_plus_2.json")},
        {"mul", "-r", "5/7", fixture("sigma3_01.json")},
        {"sum", fixture("sigma5_01.json"), fixture("sigma5_04.json")},
        {"split", fixture("sigma3_01_quarter_bad_edge.json")},
        {"dim", "--json", "--per-vertex", fixture("sigma3_01_quarter.json")},
        {"--seed", "7", "dim", fixture("sigma3_01_meet_quarter.json")},
    };
    for (const auto& args : verbs) {
        const Result first = run(args);
        const Result second = run(args);
        REQUIRE(first.code == 0);
        CHECK(first.out == second.out);
        if (args[0] != "dim" && args[0] != "--seed") {
            const auto parsed = presentation_from_string(first.out).presentation;
            CHECK(presentation_to_string(parsed) + "\n" == first.out);
        }
    }
}

TEST_CASE("the installed binary behaves like run()") {
    const std::string command = std::string(PATHSET_CLI_BINARY) + " dim " + fixture("sigma3_01.json");
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), ::pclose);
    REQUIRE(pipe);
    std::string output;
    char buffer[256];
    while (std::fgets(buffer, sizeof buffer, pipe.get()) != nullptr) output += buffer;
    CHECK(output == run({"dim", fixture("sigma3_01.json")}).out);
}
