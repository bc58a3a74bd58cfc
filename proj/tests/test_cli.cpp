#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.txt";
    const std::string cmd = std::string(DQLIN_CLI_PATH) + " " + args + " > " + out_path +
                            " 2> cli_stderr.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string entry(double s0, double d0 = 0.0) {
    std::ostringstream os;
    os << "[" << s0 << ",0,0,0," << d0 << ",0,0,0]";
    return os.str();
}

void write_identity2(const std::string& path) {
    write_file(path, "{\"n\":2,\"entries\":[[" + entry(1) + "," + entry(0) + "],[" +
                         entry(0) + "," + entry(1) + "]]}");
}

void write_herm2(const std::string& path) {
    // [[1, i],[-i, 1]]
    write_file(path,
               "{\"n\":2,\"entries\":[[[1,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0]],"
               "[[0,-1,0,0,0,0,0,0],[1,0,0,0,0,0,0,0]]]}");
}

} // namespace

TEST_CASE("det of the identity") {
    write_identity2("id2.json");
    const RunResult r = run_cli("det id2.json --method moore");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["definition"] == "moore");
    CHECK(j["value"][0].get<double>() == doctest::Approx(1.0));
    CHECK(j["dual_number"][0].get<double>() == doctest::Approx(1.0));
    CHECK(j["dual_number"][1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("chen det of a singular Hermitian matrix") {
    write_herm2("herm2.json");
    const RunResult r = run_cli("det herm2.json --method chen");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["dual_number"][0].get<double>() == doctest::Approx(0.0));
    CHECK(j["dual_number"][1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("all det methods run") {
    write_herm2("herm2.json");
    for (const std::string m : {"moore", "chen", "krow", "kcol", "dyson"}) {
        const RunResult r = run_cli("det herm2.json --method " + m + " --k 2 --anchor 2");
        CHECK(r.exit_code == 0);
    }
    write_identity2("id2.json");
    CHECK(run_cli("det id2.json --method quasi").exit_code == 0);
}

TEST_CASE("input errors exit with code 2") {
    write_file("nonsquare.json",
               "{\"n\":2,\"entries\":[[" + entry(1) + "," + entry(0) + "]]}");
    CHECK(run_cli("det nonsquare.json --method moore").exit_code == 2);
    write_file("garbage.json", "this is not json");
    CHECK(run_cli("det garbage.json --method moore").exit_code == 2);
    CHECK(run_cli("det missing_file.json --method moore").exit_code == 2);
    write_identity2("id2.json");
    CHECK(run_cli("det id2.json --method bogus").exit_code == 2);
}

TEST_CASE("domain errors exit with code 3") {
    // Non-Hermitian input for eig.
    write_file("nonherm.json", "{\"n\":2,\"entries\":[[" + entry(1) + "," + entry(2) +
                                   "],[" + entry(0) + "," + entry(1) + "]]}");
    CHECK(run_cli("eig nonherm.json").exit_code == 3);
    // Mismatched off-diagonal pair plus a non-real diagonal entry: no
    // single index deletion leaves a Hermitian minor.
    write_file("general3.json",
               "{\"n\":3,\"entries\":[[" + entry(1) + "," + entry(2) + "," + entry(0) +
                   "],[" + entry(0) + "," + entry(1) + "," + entry(0) + "],[" +
                   entry(0) + "," + entry(0) + ",[0,1,0,0,0,0,0,0]]]}");
    for (int k = 1; k <= 3; ++k)
        CHECK(run_cli("det general3.json --method dyson --k " + std::to_string(k))
                  .exit_code == 3);
}

TEST_CASE("size cap exits with code 4") {
    std::ostringstream big;
    big << "{\"n\":9,\"entries\":[";
    for (int i = 0; i < 9; ++i) {
        big << (i ? ",[" : "[");
        for (int j = 0; j < 9; ++j) big << (j ? "," : "") << entry(i == j ? 1 : 0);
        big << "]";
    }
    big << "]}";
    write_file("big.json", big.str());
    CHECK(run_cli("det big.json --method moore").exit_code == 4);
    CHECK(run_cli("verify --n 20 --trials 1 --seed 1").exit_code == 4);
}

TEST_CASE("eig output") {
    write_identity2("id2.json");
    RunResult r = run_cli("eig id2.json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["eigenvalues"][0][0].get<double>() == doctest::Approx(1.0));
    CHECK(j["eigenvalues"][1][0].get<double>() == doctest::Approx(1.0));

    write_herm2("herm2.json");
    r = run_cli("eig herm2.json");
    REQUIRE(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["eigenvalues"][0][0].get<double>() == doctest::Approx(2.0));
    CHECK(j["eigenvalues"][1][0].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("charpoly output") {
    // diag(1+eps, 2) -> x^2 - (3+eps) x + (2+2eps)
    write_file("d2.json", "{\"n\":2,\"entries\":[[" + entry(1, 1) + "," + entry(0) +
                              "],[" + entry(0) + "," + entry(2) + "]]}");
    const RunResult r = run_cli("charpoly d2.json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["degree"] == 2);
    CHECK(j["coefficients"][0][0].get<double>() == doctest::Approx(2.0));
    CHECK(j["coefficients"][0][1].get<double>() == doctest::Approx(2.0));
    CHECK(j["coefficients"][1][0].get<double>() == doctest::Approx(-3.0));
    CHECK(j["coefficients"][1][1].get<double>() == doctest::Approx(-1.0));
    CHECK(j["coefficients"][2][0].get<double>() == doctest::Approx(1.0));

    // Repeated standard eigenvalue carries a note.
    write_file("rep.json", "{\"n\":2,\"entries\":[[" + entry(1, 1) + "," + entry(0) +
                               "],[" + entry(0) + "," + entry(1, -1) + "]]}");
    const RunResult rr = run_cli("charpoly rep.json");
    REQUIRE(rr.exit_code == 0);
    CHECK(json::parse(rr.out).contains("note"));
}

TEST_CASE("verify runs and is deterministic") {
    const RunResult a = run_cli("verify --n 3 --trials 5 --seed 1");
    REQUIRE(a.exit_code == 0);
    const json j = json::parse(a.out);
    CHECK(j["pass"] == true);
    CHECK(j["properties"].size() > 10);
    for (const auto& rec : j["properties"]) CHECK(rec["failures"] == 0);

    const RunResult b = run_cli("verify --n 3 --trials 5 --seed 1");
    CHECK(a.out == b.out);  // byte-identical

    const RunResult c = run_cli("verify --n 3 --trials 5 --seed 2");
    CHECK(a.out != c.out);
}

TEST_CASE("verify filter") {
    const RunResult r = run_cli("verify --n 4 --trials 5 --seed 1 --filter lemma-3.4");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["properties"].size() == 1);
    CHECK(j["properties"][0]["property"] == "lemma-3.4");

    CHECK(run_cli("verify --n 3 --trials 5 --seed 1 --filter no-such-property").exit_code ==
          2);
}
