#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(ORLOV_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(ORLOV_FIXTURES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("orlov_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("ospec on Linear(4)") {
    const Run r = run("ospec --algebra " + fixture("linear4.json"));
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == "orlov-kit/1");
    CHECK(j["spectrum"] == json::array({0, 1, 2, 3}));
    CHECK(j["ext_dim"] == 0);
    CHECK(j["u_dim"] == 3);
    CHECK(j["witnesses"].size() == 4);
}

TEST_CASE("output does not depend on the worker count") {
    for (const std::string& cmd : {"ospec --algebra " + fixture("linear4.json"),
                                   "closure --algebra " + fixture("linear4.json") + " --gen 1-1+2-1+3-1+4-1 --level 2"}) {
        const Run a = run(cmd + " --jobs 1"), b = run(cmd + " --jobs 3"), c = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}

TEST_CASE("AR quiver export") {
    const Run r = run("arquiver --algebra " + fixture("linear2.json") + " --dot");
    REQUIRE(r.code == 0);
    int nodes = 0, arrows = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
        if (line.find("->") != std::string::npos) ++arrows;
        else if (line.find("\"M[") != std::string::npos) ++nodes;
    }
    CHECK(nodes == 3);
    CHECK(arrows == 2);
    CHECK(r.out.rfind("digraph", 0) == 0);
    const Run j = run("arquiver --algebra " + fixture("linear4.json"));
    REQUIRE(j.code == 0);
    CHECK(json::parse(j.out)["arrows"].size() == 12);
}

TEST_CASE("algebra, indec, closure and gentime") {
    const json a = json::parse(run("algebra --algebra " + fixture("cyclic4_rel20.json")).out);
    CHECK(a["kupisch"] == json::array({20, 23, 22, 21}));
    CHECK(a["loewy_length"] == 23);
    const json i = json::parse(run("indec --algebra " + fixture("linear3_ab.json")).out);
    CHECK(i["count"] == 5);
    const json c = json::parse(run("closure --algebra " + fixture("linear4.json") + " --gen 1-1+2-1+3-1+4-1 --level 3").out);
    CHECK(c["count"] == 9);
    CHECK(c["everything"] == false);
    const json g = json::parse(run("gentime --algebra " + fixture("linear4.json") + " --gen 1-1+2-1+3-1+4-1").out);
    CHECK(g["generation_time"] == 3);
    const json g2 = json::parse(run("gentime --algebra " + fixture("linear3.json") + " --gen 2-1+3-1").out);
    CHECK(g2["generation_time"].is_null());
}

TEST_CASE("layer lengths and dimensions") {
    const json l = json::parse(run("llts --algebra " + fixture("cyclic4_rel20.json") + " --simples 1").out);
    CHECK(l["llts"] == 18);
    const json m = json::parse(run("llts --algebra " + fixture("cyclic4_rel20.json") + " --simples 1 --module 1-20").out);
    CHECK(m["torsion_part"] == "2-19");
    const json t = json::parse(run("thm2 --algebra " + fixture("cyclic4_rel20.json") + " --simples \"\"").out);
    CHECK(t["llts"] == 23);
    CHECK(t["spectrum_subset"] == json::array({0, 1, 2, 3, 4, 5, 7, 11, 22}));
    const json p = json::parse(run("pd --algebra " + fixture("linear3_ab.json")).out);
    CHECK(p["global_dimension"] == 2);
    CHECK(p["simples"][0]["pd"] == 2);
    const json q = json::parse(run("pd --algebra " + fixture("cyclic4_rel20.json") + " --module 1-1").out);
    CHECK(q["pd"] == "inf");
}

TEST_CASE("coghost commands") {
    const json c = json::parse(run("coghost --algebra " + fixture("linear4.json") + " --m 2 --list-irreducible").out);
    CHECK(c["irreducible"] == json::array({"f+[3,3]", "f+[3,4]", "f+[4,4]"}));
    const Run l = run("coghost-lemma --algebra " + fixture("linear3.json") + " --nmax 3");
    CHECK(l.code == 0);
    CHECK(json::parse(l.out)["pass"] == true);
}

TEST_CASE("oracle verify") {
    const Run r = run("oracle verify --algebra " + fixture("linear3.json") + " --cap 8");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["pass"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("ospec --algebra " + fixture("linear4.json") + " --bogus").code == 2);
    CHECK(run("ospec --algebra /nonexistent.json").code == 3);
    CHECK(run("ospec --algebra " + temp_file("bad.json", "{\"shape\":\"linear\"")).code == 3);
    CHECK(run("ospec --algebra " + temp_file("tri.json", "{\"shape\":\"triangle\",\"n\":3,\"relation\":null}")).code == 3);
    CHECK(run("algebra --algebra " + temp_file("cyc1.json", "{\"shape\":\"cyclic\",\"n\":3,\"relation\":{\"start\":1,\"length\":1}}")).code == 3);
    CHECK(run("closure --algebra " + fixture("linear3.json") + " --gen 2-3 --level 1").code == 3);
    CHECK(run("ospec --algebra " + temp_file("lin7.json", "{\"shape\":\"linear\",\"n\":7,\"relation\":null}")).code == 4);
    CHECK(run("oracle verify --algebra " + fixture("linear3.json") + " --cap 20").code == 4);
    CHECK(run("ospec --algebra " + fixture("cyclic4_rel20.json")).code == 3);
}

TEST_CASE("paper verify on a subset of checks") {
    const Run r = run("paper verify --only 2 --only 4 --seed 5");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["seed"] == 5);
    CHECK(j["checks"].size() == 2);
    CHECK(j["pass"] == true);
}
