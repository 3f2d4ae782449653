#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "yba/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(YBA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_perturbed_sl2(const std::string& path) {
    const yba::RMatrix r = yba::catalog_sln_standard(2);
    json doc = yba::rmatrix_to_json(2, r.matrix());
    const std::string value = doc["entries"][0]["value"].get<std::string>();
    doc["entries"][0]["value"] = "(" + value + ") + 1";
    std::ofstream out(path);
    out << doc.dump(2);
    return path;
}

}  // namespace

TEST_CASE("check passes on catalog entries with exit 0") {
    const RunResult r = run_cli("check --catalog identity --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("yang-baxter: pass") != std::string::npos);
    CHECK(r.output.find("braid relation: pass") != std::string::npos);

    CHECK(run_cli("check --catalog sln_standard --n 3").exit_code == 0);
    CHECK(run_cli("check --catalog \"diagonal(q,1,1,q^2)\" --n 2").exit_code == 0);
}

TEST_CASE("check fails on a perturbed file with a witness and exit 1") {
    const std::string path = write_perturbed_sl2("cli_perturbed_sl2.json");
    const RunResult r = run_cli("check --input " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("yang-baxter: FAIL") != std::string::npos);
    CHECK(r.output.find("row (") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("check --catalog no_such_entry --n 2").exit_code == 2);
    CHECK(run_cli("check --input /nonexistent/file.json").exit_code == 2);
    CHECK(run_cli("serre --catalog sln_quantum_plane --n 2 --N 3 --at-q 2").exit_code == 2);
    CHECK(run_cli("pair \"t[0,0]\" \"t[0,0]\" --catalog identity --n 2").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    // Unvalidated sources are input errors for computing commands.
    const std::string path = write_perturbed_sl2("cli_perturbed_sl2b.json");
    CHECK(run_cli("serre --input " + path + " --N 2").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("factorial emits identity + flip for the identity R-matrix") {
    const RunResult r = run_cli("factorial --catalog identity --n 2 --N 2 --format doc");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["tool"]["name"] == "yba");
    const auto& f2 = doc["results"]["factorials"][1];
    REQUIRE(f2["N"] == 2);
    // 1 + P in the composite basis (00,01,10,11).
    const json expected = json::array({json::array({"2", "0", "0", "0"}),
                                       json::array({"0", "1", "1", "0"}),
                                       json::array({"0", "1", "1", "0"}),
                                       json::array({"0", "0", "0", "2"})});
    CHECK(f2["matrix"]["entries"] == expected);
}

TEST_CASE("factorial --verify reports the oracle cross-check") {
    const RunResult r = run_cli("factorial --catalog sln_standard --n 2 --N 3 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("oracle: match") != std::string::npos);
}

TEST_CASE("factorial --at-q displays numeric matrices") {
    const RunResult r = run_cli("factorial --catalog sln_standard --n 2 --N 2 --at-q 2");
    CHECK(r.exit_code == 0);
    // [2!] entry 1 + q at q = 2.
    CHECK(r.output.find("3") != std::string::npos);
}

TEST_CASE("serre doc output carries the relator schema") {
    const RunResult r =
        run_cli("serre --catalog sln_quantum_plane --n 2 --N 2 --format doc");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    const auto& deg2 = doc["results"]["degrees"][0];
    CHECK(deg2["N"] == 2);
    REQUIRE(deg2["e_relators"].size() == 1);
    CHECK(deg2["e_relators"][0]["rendering"] == "q*E[0]*E[1] - E[1]*E[0]");
    CHECK(deg2["f_relators"].size() == 1);
    CHECK(deg2["new_relators"].size() == 1);
    CHECK(deg2["tu_gram"]["degree"] == 2);
    // Input document embedded for reproducibility.
    CHECK(doc["input"]["dim"] == 2);
}

TEST_CASE("pair evaluates expressions and the convolution check") {
    RunResult r = run_cli("pair \"u[0,0]\" \"t[0,0]\" --catalog sln_standard --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("= q") != std::string::npos);

    r = run_cli("pair \"F[0]*F[1]\" \"E[0]*E[1]\" --catalog sln_standard --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("= 1") != std::string::npos);

    r = run_cli("pair --convolution \"u[0,1]\" \"t[1,0]\" --catalog sln_standard --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("convolution identity: pass") != std::string::npos);
}

TEST_CASE("catalog lists the built-ins") {
    const RunResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("identity") != std::string::npos);
    CHECK(r.output.find("sln_quantum_plane") != std::string::npos);
}

TEST_CASE("output lands in a file when requested") {
    const RunResult r = run_cli("braid --catalog identity --n 2 --output cli_braid_out.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in("cli_braid_out.txt");
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content.find("braid matrix") != std::string::npos);
    std::remove("cli_braid_out.txt");
}
