#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef SPIEGEL_CLI_PATH
#error "SPIEGEL_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(SPIEGEL_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("rank4 command formats") {
    auto human = run_cli("rank4 5");
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("rk4(K)   = 0") != std::string::npos);
    CHECK(human.out.find("rk4(K#)  = 0") != std::string::npos);
    CHECK(human.out.find("equal") != std::string::npos);

    auto csv = run_cli("rank4 5 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "d,case,D,omega,rk4_K,rk4_sharp,equality,criterion\n"
                     "5,1mod4,5,1,0,0,equal,E(2,2)=0\n");

    auto json = run_cli("rank4 40 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out == "{\"d\":40,\"case\":\"0mod8\",\"D\":5,\"omega\":1,"
                      "\"rk4_K\":0,\"rk4_sharp\":0,\"equality\":\"equal\","
                      "\"criterion\":\"\"}\n");

    auto cc = run_cli("rank4 136 --cross-check --format csv");
    CHECK(cc.exit_code == 0);
    CHECK(cc.out.find("136,0mod8,17,1,1,1,equal,") != std::string::npos);
}

TEST_CASE("rank4 command rejections") {
    CHECK(run_cli("rank4 20").exit_code == 1);
    CHECK(run_cli("rank4 1").exit_code == 1);
    CHECK(run_cli("rank4 0").exit_code == 1);
    CHECK(run_cli("rank4 abc").exit_code == 1);
    CHECK(run_cli("rank4").exit_code == 1);
    CHECK(run_cli("nonsense 5").exit_code == 1);
}

TEST_CASE("scan command") {
    auto bad = run_cli("scan --min 10 --max 5");
    CHECK(bad.exit_code == 1);

    auto small = run_cli("scan --min 1 --max 100");
    CHECK(small.exit_code == 0);
    CHECK(small.out.rfind("d,case,D,omega,rk4_K,rk4_sharp,equality,criterion\n", 0) == 0);
    CHECK(small.out.find("\n5,1mod4,5,1,0,0,equal,E(2,2)=0\n") != std::string::npos);
    CHECK(small.out.find("\n8,0mod8,1,0,0,0,equal,\n") != std::string::npos);
    CHECK(small.out.find("\n12,4mod8,3,1,0,0,equal,E(-2,2)!=0\n") != std::string::npos);

    auto parallel = run_cli("scan --min 1 --max 100 --jobs 4");
    CHECK(parallel.exit_code == 0);
    CHECK(parallel.out == small.out);

    auto json = run_cli("scan --min 5 --max 8 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.rfind("{\"d\":5,", 0) == 0);

    auto checked = run_cli("scan --min 1 --max 500 --cross-check");
    CHECK(checked.exit_code == 0);
    CHECK(checked.out == run_cli("scan --min 1 --max 500").out);
}

TEST_CASE("identities command") {
    auto ok = run_cli("identities 15");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PASS sigma(s,t,u,v)=sigma(t,s,v,u)") != std::string::npos);
    CHECK(ok.out.find("PASS S(1,1)=2S(-1,1)") != std::string::npos);
    CHECK(ok.out.find("SKIP S(-1,1)=S(1,1)") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    auto branch = run_cli("identities 105"); // 105 = 1 mod 4
    CHECK(branch.exit_code == 0);
    CHECK(branch.out.find("PASS S(-1,1)=S(1,1)") != std::string::npos);
    CHECK(branch.out.find("SKIP S(1,1)=2S(-1,1)") != std::string::npos);

    CHECK(run_cli("identities 2").exit_code == 1);
    CHECK(run_cli("identities 45").exit_code == 1);
    CHECK(run_cli("identities -3").exit_code == 1);
}

TEST_CASE("oracle command") {
    auto five = run_cli("oracle 5");
    CHECK(five.exit_code == 0);
    CHECK(five.out.find("agree") != std::string::npos);

    auto forty = run_cli("oracle 40");
    CHECK(forty.exit_code == 0);

    auto seventeen = run_cli("oracle 17");
    CHECK(seventeen.exit_code == 0);
    CHECK(seventeen.out.find("rk4(K#)=1") != std::string::npos);

    auto seven = run_cli("oracle 7", /*merge_stderr=*/true);
    CHECK(seven.exit_code == 1);
    // the rejection names the shape to use instead
    CHECK(seven.out.find("28") != std::string::npos);
}

TEST_CASE("stats command") {
    CHECK(run_cli("stats --max 0").exit_code == 1);

    auto tiny = run_cli("stats --max 100");
    CHECK(tiny.exit_code == 0);
    CHECK(tiny.out.find("insufficient-data") != std::string::npos);

    auto medium = run_cli("stats --max 5000 --jobs 2");
    CHECK(medium.exit_code == 0);
    CHECK(medium.out.find("0.5") != std::string::npos);
}
