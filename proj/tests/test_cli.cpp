#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string tmp = "cli_out.tmp";
    std::string cmd = std::string(OQ_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("catalog list prints the built-in entries as JSON") {
    auto r = run("catalog list");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    bool has_heis = false;
    for (const auto& e : j["entries"]) has_heis |= (e["id"] == "heis1");
    CHECK(has_heis);
}

TEST_CASE("catalog show exports a full group definition") {
    auto r = run("catalog show dim5b");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["dim"] == 5);
    CHECK(j["step"] == 4);
    CHECK(j["weights"] == json({5, 4, 3, 2, 1}));
    CHECK(j["brackets"].size() == 4);
}

TEST_CASE("orbits reports flatness and the Pfaffian") {
    auto r = run("orbits g4delta:delta=1 --point 0,0,1,1");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["is_flat"] == true);
    CHECK(j["Pf"] == "2");
    CHECK(j["orbit_dim"] == 2);
}

TEST_CASE("orbits accepts the UTF-8 parameter spelling") {
    auto r = run("'orbits' 'g4delta:δ=1' --point 0,0,1,1");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["Pf_value"] == 2.0);
}

TEST_CASE("orbits handles a non-flat point") {
    auto r = run("orbits g4delta:delta=1 --point 0,0,1,-1"); // Pf = 0
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["is_flat"] == false);
}

TEST_CASE("unknown subcommand is a usage error") {
    auto r = run("frobnicate");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("help") != std::string::npos);
}

TEST_CASE("unknown group is a usage error") {
    CHECK(run("orbits nosuchgroup --point 0,0").exit_code == 2);
    CHECK(run("verify --group heis1 --suite all").exit_code == 2);
}

TEST_CASE("rep reports the oscillator ladder") {
    auto r = run("rep g4delta:delta=2 --sigma 1 --tau 1 --levels 3 -M 128");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["lambda"] == 3.0); // sigma + delta tau
    auto spec = j["oscillator_spectrum"];
    REQUIRE(spec.size() == 3);
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(double(spec[k]) - 3.0 * (2 * k + 1)) < 1e-6);
}

TEST_CASE("quantize reports the trace formula value") {
    auto r = run("quantize --group g4delta:delta=1 --scheme pedersen "
                 "--symbol gauss:1,0,0\\;1,0,0 --sigma 1 --tau 0 -M 128");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["lambda"] == 1.0);
    // Tr Ped(e^{-rho^2-theta^2}) = pi / (2 pi |lambda|) = 1/2
    CHECK(std::abs(double(j["trace"][0]) - 0.5) < 1e-6);
    CHECK(std::abs(double(j["trace"][1])) < 1e-12);
}

TEST_CASE("quantize exports the matrix as CSV with a header") {
    auto r = run("quantize --group heis1 --scheme weyl "
                 "--symbol gauss:1,0,0\\;1,0,0 --sigma 1 -M 16 -L 6 "
                 "--csv cli_test_matrix.csv");
    REQUIRE(r.exit_code == 0);
    std::string csv = slurp("cli_test_matrix.csv");
    CHECK(csv.substr(0, 13) == "row,col,re,im");
    // 16 x 16 entries + header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);
    std::remove("cli_test_matrix.csv");
}

TEST_CASE("symclass reports Taylor polynomials and the Rockland data") {
    auto r = run("symclass heis1 --max-degree 2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["rockland"]["order"] == 2);
    CHECK(j["rockland"]["homogeneity_exact"] == true);
    // degrees 0,1,2 with weights (1,1,2): multi-indices {}, q, p, q^2, qp, p^2, s
    CHECK(j["taylor_polynomials"].size() == 7);
}

TEST_CASE("verify pedersen suite passes and writes a schema-1 report") {
    auto r = run("verify --group g4delta:delta=1 --suite pedersen "
                 "--json cli_test_report.json");
    CHECK(r.exit_code == 0);
    json j = json::parse(slurp("cli_test_report.json"));
    CHECK(j["schema"] == 1);
    CHECK(j["pass"] == true);
    REQUIRE(j["checks"].size() >= 3);
    for (const auto& c : j["checks"]) {
        CHECK(c["pass"] == true);
        CHECK(double(c["max_rel_error"]) < double(c["tolerance"]));
    }
    std::remove("cli_test_report.json");
}

TEST_CASE("verify reports are byte-identical for the same seed") {
    auto r1 = run("verify --group g4delta:delta=1 --suite fourier --seed 7 "
                  "--json cli_rep_a.json");
    auto r2 = run("verify --group g4delta:delta=1 --suite fourier --seed 7 "
                  "--json cli_rep_b.json");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    std::string a = slurp("cli_rep_a.json"), b = slurp("cli_rep_b.json");
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove("cli_rep_a.json");
    std::remove("cli_rep_b.json");
}

TEST_CASE("verify exits 1 on an under-resolved grid and still writes a report") {
    auto r = run("verify --group g4delta:delta=1 --suite pedersen -M 16 "
                 "--json cli_fail_report.json");
    CHECK(r.exit_code == 1);
    json j = json::parse(slurp("cli_fail_report.json"));
    CHECK(j["pass"] == false);
    std::remove("cli_fail_report.json");
}
