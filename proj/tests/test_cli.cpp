// End-to-end runs of the command-line binary: exit codes, output shape, and
// byte-level determinism.  The binary path and fixture directory come in as
// compile definitions so the suite works from any build tree.

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FINCAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(FINCAT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli: hom counts and formats") {
    RunResult r = run_cli("hom --from '<2>' --to '<3>'");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("count") == 16);

    RunResult nz = run_cli("hom --from '(2)' --to '(3)' --nonzero --trunc 3");
    CHECK(nz.code == 0);
    CHECK(json::parse(nz.out).at("count") == 15);

    RunResult csv = run_cli("--format csv hom --from '<1>' --to '<1>'");
    CHECK(csv.code == 0);
    CHECK(csv.out == "from,to,count\n1,1,2\n");
}

TEST_CASE("cli: malformed invocations exit 2") {
    CHECK(run_cli("hom --from 'garbage' --to '<1>'").code == 2);
    CHECK(run_cli("--no-such-flag check").code == 2);
    CHECK(run_cli("check no-such-group").code == 2);
    CHECK(run_cli("--trunc 3 tuplecat").code == 2);  // over the dense-table cap
    CHECK(run_cli("lift --input /nonexistent.json").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli: census formats") {
    RunResult r = run_cli("--format csv tuplecat");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("src,dst,nonzero\n", 0) == 0);
    RunResult j = run_cli("tuplecat");
    CHECK(j.code == 0);
    CHECK(json::parse(j.out).at("census").at("total") == 567);
}

TEST_CASE("cli: diagram validation distinguishes broken from malformed") {
    CHECK(run_cli("diagram validate --input " + fixture("rep1.json")).code == 0);
    CHECK(run_cli("diagram validate --input " + fixture("broken-diagram.json")).code == 1);
    CHECK(run_cli("diagram validate --input " + fixture("not-json.json")).code == 2);
}

TEST_CASE("cli: category validation flags the associativity counterexample") {
    RunResult r = run_cli("check --category " + fixture("broken-assoc.json"));
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK_FALSE(j.at("ok").get<bool>());
    CHECK(j.at("problems").dump().find("associativity") != std::string::npos);

    CHECK(run_cli("check --category " + fixture("walking-iso.json")).code == 0);
}

TEST_CASE("cli: lift output is byte-stable and matches the frozen levels") {
    std::string cmd = "lift --input " + fixture("rep1.json");
    RunResult a = run_cli(cmd), b = run_cli(cmd);
    CHECK(a.code == 0);
    REQUIRE(a.out == b.out);
    json j = json::parse(a.out);
    std::vector<int> sizes;
    for (const auto& lvl : j.at("levels")) sizes.push_back(lvl.at("size").get<int>());
    CHECK(sizes == std::vector<int>{0, 0, 1, 2, 2, 4, 4, 8});

    RunResult at = run_cli("lift --input " + fixture("rep1.json") + " --at '(2,2)'");
    CHECK(at.code == 0);
    CHECK(json::parse(at.out).at("size") == 8);
}

TEST_CASE("cli: representable emission round-trips through lift") {
    RunResult rep = run_cli("diagram rep --at '<2>'");
    CHECK(rep.code == 0);
    json j = json::parse(rep.out);
    CHECK(j.at("on_objects").at("<2>") == 8);
    CHECK(run_cli("diagram precompose --input " + fixture("grep1.json")).code == 0);
}

TEST_CASE("cli: check subcommand runs named groups") {
    RunResult r = run_cli("--samples 3 check axioms homcount");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("summary").at("failed") == 0);
    CHECK(j.at("config").at("random_count") == 3);
}

TEST_CASE("cli: classify and segal") {
    RunResult r = run_cli("classify --cat walking-iso --n 2 --k 2 --verify");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("levels").at(2).at(2) == 512);

    CHECK(run_cli("segal --cat walking-iso --weq all --n 2 --k 1").code == 0);
    CHECK(run_cli("classify --cat no-such-cat").code == 2);
}

TEST_CASE("cli: prism fixtures") {
    RunResult c = run_cli("prism --fixture identity");
    CHECK(c.code == 0);
    CHECK(json::parse(c.out).at("constant") == true);
    RunResult a = run_cli("prism --fixture arrow");
    CHECK(a.code == 0);
    CHECK(json::parse(a.out).at("constant") == false);
}

TEST_CASE("cli: nerve of a category-valued fixture") {
    RunResult r = run_cli("--degree 3 diagram nerve --input " + fixture("catdiag.json"));
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("ok") == true);
    CHECK(j.at("levels").at("<1>") == json::array({2, 3, 4, 5}));
    CHECK(j.at("levels").at("<0>") == json::array({1, 1, 1, 1}));
}

TEST_CASE("cli: emit category as dot") {
    RunResult r = run_cli("--format dot emit category --name walking-arrow");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(r.out.find("n0 -> n1") != std::string::npos);
}
