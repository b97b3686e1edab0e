#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("SLOPES_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "SLOPES_CLI must point at the binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("facets").code == 2);                       // missing -n
    CHECK(run_cli("count --family nope -n 4").code == 2);     // bad family
    CHECK(run_cli("treepoly --wheel garbage").code == 2);     // unparsable wheel
    CHECK(run_cli("facets -n 12").code == 2);                 // out of range
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("facets output is byte stable") {
    auto r = run_cli("facets -n 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1-2 1-3 1-4 2-3 3-4\n"
          "1-2 1-4 2-3 2-4 3-4\n"
          "1-3 1-4 2-3 2-4 3-4\n");
}

TEST_CASE("h vector rows") {
    auto r = run_cli("hvector -n 5");
    CHECK(r.code == 0);
    CHECK(r.out == "5,0,1\n5,1,3\n5,2,6\n5,3,5\n");
    CHECK(run_cli("hvector -n 5 --method matchings").out == r.out);
}

TEST_CASE("counts") {
    auto r = run_cli("count --family dpt -n 6 -k 4");
    CHECK(r.code == 0);
    CHECK(r.out == "dpt,6,4,561\n");
    CHECK(run_cli("count --family e -n 7 -k 3").out == "e,7,3,561\n");
    CHECK(run_cli("count --family matchings -n 2 -k 0").out == "matchings,2,0,1\n");
}

TEST_CASE("forbidden paths") {
    auto r = run_cli("forbidden -n 4");
    CHECK(r.code == 0);
    CHECK(r.out == "4-2-1-3\nb(4)=1\n");
}

TEST_CASE("verification subcommands succeed") {
    auto r = run_cli("shelling -n 5 --verify");
    CHECK(r.code == 0);
    CHECK(r.out.find("verified") != std::string::npos);
    CHECK(run_cli("groebner -n 4 --certify").code == 0);
    CHECK(run_cli("groebner -n 4 --k4-probe").code == 0);
    CHECK(run_cli("groebner -n 4").code == 2);  // must pick a mode
}

TEST_CASE("leading tree of a wheel") {
    auto r = run_cli("leading-tree --wheel \"1;4,3,2\"");
    CHECK(r.code == 0);
    CHECK(r.out == "1-2 1-3 2-4\ncenter-min\n");
}

TEST_CASE("hilbert series") {
    CHECK(run_cli("hilbert -n 4").out == "(1+t+t^2)/(1-t)^5\n");
}

}  // TEST_SUITE
