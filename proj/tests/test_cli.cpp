#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BUCHSTABER_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool first_line_is(const RunResult& r, const std::string& expect) {
    return r.out.rfind(expect + "\n", 0) == 0;
}

}  // namespace

TEST_CASE("srm command") {
    RunResult r = run_cli("srm 8 5");
    CHECK(r.exit_code == 0);
    CHECK(first_line_is(r, "4"));

    r = run_cli("srm 5 5");
    CHECK(r.exit_code == 0);
    CHECK(first_line_is(r, "5"));

    r = run_cli("srm 12 8 --bounds-only");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("[4..5]") == 0);

    r = run_cli("srm 8 5 --certificate");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("certificate:") != std::string::npos);
    CHECK(r.out.find("4 8 5") != std::string::npos);

    // a cell the bounds alone cannot settle: the solver resolves m_5(7)
    r = run_cli("srm 13 8");
    CHECK(r.exit_code == 0);
    CHECK(first_line_is(r, "4"));

    CHECK(run_cli("srm 3 9").exit_code == 1);
    CHECK(run_cli("srm").exit_code == 1);
}

TEST_CASE("mkb command") {
    RunResult r = run_cli("mkb 4 5 --exact");
    CHECK(r.exit_code == 0);
    CHECK(first_line_is(r, "9"));

    r = run_cli("mkb 6 9");
    CHECK(r.exit_code == 2);
    CHECK(first_line_is(r, "[13..17]"));

    r = run_cli("mkb 2 7");
    CHECK(r.exit_code == 0);
    CHECK(first_line_is(r, "21"));

    r = run_cli("mkb 4 4 --certificate");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("certificate:") != std::string::npos);

    CHECK(run_cli("mkb 1 5").exit_code == 1);
    CHECK(run_cli("mkb 17 5").exit_code == 1);
}

TEST_CASE("verify command") {
    {
        std::ofstream f("cli-good.tmp");
        f << "4 8 5\n"
          << "1 0 0 0 0 1 1 1\n"
          << "0 1 0 0 1 0 1 1\n"
          << "0 0 1 0 1 1 0 1\n"
          << "0 0 0 1 1 1 1 0\n";
    }
    CHECK(run_cli("verify cli-good.tmp").exit_code == 0);
    {
        std::ofstream f("cli-too-much.tmp");
        f << "4 8 6\n"
          << "1 0 0 0 0 1 1 1\n"
          << "0 1 0 0 1 0 1 1\n"
          << "0 0 1 0 1 1 0 1\n"
          << "0 0 0 1 1 1 1 0\n";
    }
    RunResult r = run_cli("verify cli-too-much.tmp");
    CHECK(r.exit_code == 0);  // p=6 is weaker than p=5, still realized
    {
        std::ofstream f("cli-bad.tmp");
        f << "2 4 2\n"
          << "1 0 1 1\n"
          << "0 1 1 1\n";
    }
    r = run_cli("verify cli-bad.tmp");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("hyperplane") != std::string::npos);
    {
        std::ofstream f("cli-malformed.tmp");
        f << "2 2 1\n1 x\n0 1\n";
    }
    CHECK(run_cli("verify cli-malformed.tmp").exit_code == 1);
    CHECK(run_cli("verify no-such-file.tmp").exit_code == 1);
    std::remove("cli-good.tmp");
    std::remove("cli-too-much.tmp");
    std::remove("cli-bad.tmp");
    std::remove("cli-malformed.tmp");
}

TEST_CASE("table command emits deterministic CSV") {
    RunResult a = run_cli("table srm --m 2..8 --p 2..5 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(first_line_is(a, "m,p,value,lo,hi,provenance"));
    CHECK(a.out.find("\n8,5,4,4,4,") != std::string::npos);
    RunResult b = run_cli("table srm --m 2..8 --p 2..5 --format csv");
    CHECK(a.out == b.out);

    RunResult c = run_cli("table mkb --k 3 --b 0..14 --format csv");
    CHECK(c.exit_code == 0);
    CHECK(first_line_is(c, "k,b,value,lo,hi,provenance"));
    // m_3(3Q+2) = 7Q+4: the R=2 column must read 4, 11, 18, 25, 32
    for (auto& probe : {std::string("\n3,2,4,"), std::string("\n3,5,11,"),
                        std::string("\n3,8,18,"), std::string("\n3,11,25,"),
                        std::string("\n3,14,32,")})
        CHECK(c.out.find(probe) != std::string::npos);

    RunResult d = run_cli("table mkb --k 3 --b 0..2 --format markdown");
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("| k | b | value |") == 0);

    CHECK(run_cli("table srm --m 9..2 --p 2..3").exit_code == 1);
    CHECK(run_cli("table nope --m 2..3 --p 2..3").exit_code == 1);
}

TEST_CASE("check-tables command") {
    RunResult r = run_cli("check-tables --bounds-only --quiet");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mismatches=0") != std::string::npos);

    RunResult restricted = run_cli("check-tables --srm-only --pmax 6 --mmax 16 --quiet");
    CHECK(restricted.exit_code == 0);
    CHECK(restricted.out.find("mismatches=0") != std::string::npos);
}

TEST_CASE("periodicity command") {
    RunResult r = run_cli("periodicity 3 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("violations=0") != std::string::npos);
    CHECK(r.out.find("HOLDS") != std::string::npos);
}

TEST_CASE("cache flag round trip") {
    std::remove("cli-cache.tmp");
    RunResult cold = run_cli("mkb 5 7 --exact --cache cli-cache.tmp");
    CHECK(cold.exit_code == 0);
    CHECK(first_line_is(cold, "11"));
    std::ifstream f("cli-cache.tmp");
    CHECK(f.good());
    RunResult warm = run_cli("mkb 5 7 --exact --cache cli-cache.tmp");
    CHECK(warm.exit_code == 0);
    CHECK(first_line_is(warm, "11"));
    std::remove("cli-cache.tmp");
}

TEST_CASE("version flag") {
    RunResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
}
