#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "corpus.hpp"
#include "hamsep/cli.hpp"

using namespace hamsep;
using namespace hamsep::cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

template <class Options, class Cmd>
Run run(Cmd cmd, const Options& options) {
    std::ostringstream out, err;
    Run r;
    r.code = cmd(options, Streams{out, err, true, true});
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("hamsep_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("argument helpers") {
    CHECK(parse_edge_list("0-1,3-2") == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
    CHECK(parse_edge_list("").empty());
    CHECK_THROWS(parse_edge_list("0-x"));
    CHECK_THROWS(parse_edge_list("01"));
    CHECK(parse_sizes("12..14,20") == std::vector<int>{12, 13, 14, 20});
    CHECK_THROWS(parse_sizes("9..3"));
    CHECK(parse_format("auto") == InputFormat::automatic);
    CHECK_THROWS(parse_format("xml"));
    CHECK(parse_method("bt") == MethodChoice::backtrack);
}

TEST_CASE("multi-graph rotation files") {
    auto wheels = load_instances(corpus::fixture("double_wheels.rot"), InputFormat::automatic);
    REQUIRE(wheels.size() == 7);
    CHECK(wheels[0].name == "double_wheels.rot#1");
    CHECK(wheels[6].embedding == double_wheel(12));
    CHECK_THROWS_AS(load_instances("/nonexistent/file.rot", InputFormat::automatic), Error);
}

TEST_CASE("validate") {
    auto oct = run(cmd_validate, ValidateOptions{corpus::fixture("octahedron.rot")});
    CHECK(oct.code == kExitOk);
    CHECK(oct.out.find("genus 0, triangulation: yes") != std::string::npos);

    auto c4 = run(cmd_validate, ValidateOptions{corpus::fixture("c4.rot")});
    CHECK(c4.code == kExitVerdict);
    CHECK(c4.out.find("non-triangular face") != std::string::npos);

    auto k6 = run(cmd_validate, ValidateOptions{corpus::fixture("k6_projective.rot")});
    CHECK(k6.code == kExitOk);
    CHECK(k6.out.find("genus 1") != std::string::npos);

    auto pc = run(cmd_validate, ValidateOptions{corpus::fixture("octahedron.pc")});
    CHECK(pc.code == kExitOk);

    auto missing = run(cmd_validate, ValidateOptions{"/nonexistent.rot"});
    CHECK(missing.code == kExitUsage);
    CHECK_FALSE(missing.err.empty());
}

TEST_CASE("census") {
    auto wheels = run(cmd_census, CensusOptions{corpus::fixture("double_wheels.rot")});
    CHECK(wheels.code == kExitOk);
    auto rows = lines(wheels.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] ==
          "graph,n,m,genus,separators,separators_minimal,separating_3_cycles,separating_4_cycles,c,threshold");
    CHECK(rows[2] == "double_wheels.rot#2,7,15,0,5,5,0,5,1/400,violated");

    auto k6 = run(cmd_census, CensusOptions{corpus::fixture("k6_projective.rot")});
    CHECK(lines(k6.out)[1] == "k6_projective.rot,6,15,1,0,0,0,0,1/400,ok");

    auto oct = run(cmd_census, CensusOptions{corpus::fixture("octahedron.rot")});
    CHECK(lines(oct.out)[1].starts_with("octahedron.rot,6,12,0,3,3,"));

    auto c4 = run(cmd_census, CensusOptions{corpus::fixture("c4.rot")});
    CHECK(c4.code == kExitVerdict);
    CHECK(lines(c4.out).size() == 2);
}

TEST_CASE("count") {
    auto wheels = run(cmd_count, CountOptions{corpus::fixture("double_wheels.rot")});
    CHECK(wheels.code == kExitOk);
    auto rows = lines(wheels.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "graph,n,m,avoided,backtrack,subset_dp,agree");
    const char* expected[] = {"16", "30", "48", "70", "96", "126", "160"};
    for (int i = 0; i < 7; ++i)
        CHECK(rows[i + 1].ends_with("," + std::string(expected[i]) + "," + expected[i] + ",yes"));

    CountOptions avoid{corpus::fixture("octahedron.rot")};
    avoid.avoid = {Edge(0, 1)};
    CHECK(lines(run(cmd_count, avoid).out)[1] == "octahedron.rot,6,12,1,8,8,yes");

    CountOptions bt{corpus::fixture("k6_projective.rot")};
    bt.method = MethodChoice::backtrack;
    CHECK(lines(run(cmd_count, bt).out)[1] == "k6_projective.rot,6,15,0,60,,");

    CountOptions bad{corpus::fixture("octahedron.rot")};
    bad.avoid = {Edge(0, 2)};
    CHECK(run(cmd_count, bad).code == kExitUsage);
}

TEST_CASE("witness JSON") {
    WitnessOptions o{corpus::fixture("icosahedron.rot")};
    o.check_f = 100000;
    auto r = run(cmd_witness, o);
    CHECK(r.code == kExitOk);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    auto& g = doc["graphs"][0];
    CHECK(g["final_size"].get<int>() > 0);
    CHECK(g["conditions"]["all_passed"] == true);
    CHECK(g["edge_choices"]["counterexamples"].empty());
    CHECK(g["edge_choices"]["exhaustive"] == true);
    CHECK(g["stages"].size() == 6);

    auto w = run(cmd_witness, WitnessOptions{corpus::fixture("double_wheels.rot")});
    auto wheels = nlohmann::json::parse(w.out);
    auto& w8 = wheels["graphs"][2];
    CHECK(w8["n"] == 8);
    CHECK(w8["threshold"] == "violated");
    CHECK(w8["stages"][2]["size"] == 0);

    auto k6 = nlohmann::json::parse(run(cmd_witness, WitnessOptions{corpus::fixture("k6_projective.rot")}).out);
    CHECK(k6["graphs"][0]["genus"] == 1);

    auto c4 = run(cmd_witness, WitnessOptions{corpus::fixture("c4.rot")});
    CHECK(c4.code == kExitVerdict);
}

TEST_CASE("deterministic output") {
    WitnessOptions o{corpus::fixture("icosahedron.rot")};
    o.check_f = 3;
    CHECK(run(cmd_witness, o).out == run(cmd_witness, o).out);
}

TEST_CASE("experiments write CSV and summaries") {
    auto dir = scratch_dir("experiments");
    ExperimentOptions conj;
    conj.name = "conjecture";
    conj.sizes = {6, 7, 8};
    conj.instances = 2;
    conj.out_dir = dir.string();
    CHECK(run(cmd_experiment, conj).code == kExitOk);
    auto csv = lines([&] {
        std::ifstream f(dir / "conjecture.csv");
        std::stringstream s;
        s << f.rdbuf();
        return s.str();
    }());
    REQUIRE(csv.size() == 10);
    CHECK(csv[0] == "source,n,seed,count,bound,equality,ok");
    CHECK(csv[1] == "double_wheel,6,,16,16,yes,yes");
    std::ifstream summary(dir / "conjecture.json");
    auto j = nlohmann::json::parse(summary);
    CHECK(j["schema"] == 1);
    CHECK(j["violations"] == 0);

    ExperimentOptions scaling;
    scaling.name = "scaling";
    scaling.sizes = {12, 13, 14};
    auto s = run(cmd_experiment, scaling);
    CHECK(s.code == kExitOk);
    auto rows = lines(s.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n,seed,s_size,separators,separating_4_cycles,count,log2_count");
    CHECK(rows[1].starts_with("12,1,"));

    ExperimentOptions l7;
    l7.name = "lemma7";
    l7.instances = 3;
    auto l = run(cmd_experiment, l7);
    CHECK(l.code == kExitOk);
    CHECK(lines(l.out).size() == 5);  // header, 3 seeded rows, K6
    CHECK(lines(l.out).back().starts_with("k6_projective,6,1,"));

    ExperimentOptions bogus;
    bogus.name = "nope";
    CHECK(run(cmd_experiment, bogus).code == kExitUsage);
    std::filesystem::remove_all(dir);
}

TEST_CASE("generate round trips") {
    auto dir = scratch_dir("generate");
    std::filesystem::create_directories(dir);
    GenerateOptions g;
    g.family = "random";
    g.n = 14;
    g.seed = 3;
    g.output = (dir / "r.pc").string();
    g.format = InputFormat::planar_code;
    CHECK(run(cmd_generate, g).code == kExitOk);
    auto back = load_instances(g.output, InputFormat::automatic);
    REQUIRE(back.size() == 1);
    CHECK(back[0].embedding == random_triangulation_4c(14, 3, 56));

    GenerateOptions k6;
    k6.family = "k6";
    auto text = run(cmd_generate, k6).out;
    CHECK(parse_signed_rotation(text) == k6_projective());
    std::filesystem::remove_all(dir);
}
