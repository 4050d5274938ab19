#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "hecke/forms.hpp"

namespace {

#ifndef HECKE_CLI_PATH
#error "HECKE_CLI_PATH must point at the built binary"
#endif

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "/tmp/hecke_cli_test_out.txt";
    std::string cmd = std::string(HECKE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {code, ss.str()};
}

}  // namespace

TEST_CASE("coeffs writes a loadable coefficient file") {
    std::string path = "/tmp/hecke_cli_coeffs.txt";
    auto r = run_cli("coeffs --form level1:12 --bound 50 --out " + path);
    REQUIRE(r.exit_code == 0);
    hecke::EigenForm f = hecke::from_file(path);
    CHECK(f.bound() == 50);
    CHECK(f.a(2) == hecke::BigInt(-24));
    std::remove(path.c_str());
}

TEST_CASE("coeffs on an unsupported weight exits with the usage code") {
    auto r = run_cli("coeffs --form level1:14 --bound 50");
    CHECK(r.exit_code == 2);
}

TEST_CASE("malformed range exits with the usage code") {
    auto r = run_cli("voronoi --form level1:12 --x 10:zz:5");
    CHECK(r.exit_code == 2);
}

TEST_CASE("voronoi emits the documented CSV header") {
    auto r = run_cli("voronoi --form level1:12 --x 100:1000:5 --M x");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("x,M,direct,main,residual,residual_over_x4\n", 0) == 0);
}

TEST_CASE("voronoi json summary") {
    auto r = run_cli("voronoi --form level1:12 --x 100:1000:5 --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"max_abs_residual\"") != std::string::npos);
}

TEST_CASE("intervals reports a pass for the weight-12 form at 10^4") {
    auto r = run_cli("intervals --form level1:12 --x 10000 --C 3 --eps 0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    CHECK(r.out.find("\"triple\":[") != std::string::npos);
}

TEST_CASE("intervals exits 1 when a window fails") {
    // an all-positive multiplicative table has no negative eigenvalues
    std::string path = "/tmp/hecke_cli_allplus.txt";
    {
        std::ofstream f(path);
        f << "k=2 N=1\n";
        for (int n = 1; n <= 200; ++n) f << n << " 1\n";
    }
    auto r = run_cli("intervals --form file:" + path + " --x 100 --C 3 --eps 0.1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"pass\":false") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("coeffs round-trips a curve form") {
    std::string path = "/tmp/hecke_cli_curve.txt";
    auto r = run_cli("coeffs --form curve:0,-1,1,-10,-20,11 --bound 125 --out " + path);
    REQUIRE(r.exit_code == 0);
    hecke::EigenForm f = hecke::from_file(path);
    CHECK(f.level() == 11);
    CHECK(f.weight() == 2);
    CHECK(f.a(2) == hecke::BigInt(-2));
    CHECK(f.a(121) == f.a(11) * f.a(11));
    std::remove(path.c_str());
}

TEST_CASE("signs csv has the expected columns") {
    auto r = run_cli("signs --form level1:12 --bound 2000 --x 1000");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("x,plus,minus,", 0) == 0);
}

TEST_CASE("bfree csv starts with the header") {
    auto r = run_cli("bfree --form level1:12 --bound 100");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("n,bfree,sign\n1,1,+\n", 0) == 0);
}

TEST_CASE("verify runs a single fast criterion") {
    auto r = run_cli("verify --criteria 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] 8. kernel-identities") != std::string::npos);
}

TEST_CASE("a missing config file is a usage error") {
    auto r = run_cli("coeffs --form level1:12 --bound 50 --config /nonexistent_hecke_cfg");
    CHECK(r.exit_code == 2);
}

TEST_CASE("config file values are merged under flags") {
    std::string cfg = "/tmp/hecke_cli_cfg.ini";
    {
        std::ofstream f(cfg);
        f << "[coeffs]\nbound=60\n";
    }
    std::string path = "/tmp/hecke_cli_cfg_coeffs.txt";
    auto r = run_cli("coeffs --form level1:12 --config " + cfg + " --out " + path);
    REQUIRE(r.exit_code == 0);
    hecke::EigenForm f = hecke::from_file(path);
    CHECK(f.bound() == 60);
    std::remove(path.c_str());
    std::remove(cfg.c_str());
}
