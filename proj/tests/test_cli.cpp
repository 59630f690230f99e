#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

#include "convcode/catalog.hpp"

using json = nlohmann::json;
using namespace convcode;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    json body;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CONVCODE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    RunResult r{WEXITSTATUS(status), out, json()};
    if (!out.empty()) r.body = json::parse(out, nullptr, false);
    return r;
}

std::string temp_matrix_file(const std::string& name, const PolyMatrix& m) {
    const std::string path = "/tmp/convcode_test_" + name + ".txt";
    std::ofstream f(path);
    f << write_matrix_file(m);
    return path;
}

}  // namespace

TEST_CASE("bounds command") {
    auto r = run("bounds --n 5 --k 3 --delta 4 --m 2 --q 2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["status"] == "ok");
    REQUIRE(r.body["results"]["griesmer"] == 6);

    auto rb = run("bounds --n 13 --k 6 --delta 0 --m 0 --q 2");
    REQUIRE(rb.exit_code == 0);
    REQUIRE(rb.body["results"]["block"]["griesmer"] == 5);

    auto re = run("bounds --n 3 --k 2 --delta 3 --m 2 --q 3");
    REQUIRE(re.exit_code == 0);
    REQUIRE(re.body["results"]["singleton_gen"] == 6);
    REQUIRE(re.body["results"]["mds_min_q"] == 3);

    REQUIRE(run("bounds --n 5 --k 2 --delta 6 --m 2 --q 2").exit_code == 2);  // km < delta
    REQUIRE(run("bounds --n 5 --k 2 --delta 2 --m 1 --q 6").exit_code == 2);  // q not prime power
    REQUIRE(run("bounds --n 5").exit_code == 2);                              // missing flags
    REQUIRE(run("--help").exit_code == 0);
}

TEST_CASE("analyze command") {
    const auto& g1 = catalog_get("(7,3,3;1)_2");
    const auto path = temp_matrix_file("g1", g1.matrix);

    auto r = run("analyze --matrix " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["profile"]["id"] == "(7,3,3;1)_2");
    REQUIRE(r.body["results"]["distance"]["d_free"] == 8);
    REQUIRE(r.body["results"]["distance"]["stabilization_index"] == 2);
    REQUIRE(r.body["results"]["evenness"] == "even");
    REQUIRE(r.body["results"]["bounds"]["griesmer"] == 8);

    REQUIRE(run("analyze --matrix " + path + " --expect-dfree 8").exit_code == 0);
    auto bad = run("analyze --matrix " + path + " --expect-dfree 9");
    REQUIRE(bad.exit_code == 1);
    REQUIRE(bad.body["status"] == "mismatch");

    REQUIRE(run("analyze --matrix /nonexistent.txt").exit_code == 2);
}

TEST_CASE("analyze identity matrix reports a block code") {
    auto f2 = Field::get(2, 1);
    const auto path = temp_matrix_file("id3", PolyMatrix::identity(*f2, 3));
    auto r = run("analyze --matrix " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["profile"]["id"] == "(3,3,0;0)_2");
    REQUIRE(r.body["results"]["distance"]["d_free"] == 1);
}

TEST_CASE("analyze with column puncturing") {
    const auto path = temp_matrix_file("gh2", catalog_base_matrix("Gh2"));
    auto r = run("analyze --matrix " + path + " --cols 1,2,6,9,12-15");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["profile"]["id"] == "(8,4,8;2)_2");
    REQUIRE(r.body["results"]["distance"]["d_free"] == 12);
}

TEST_CASE("analyze honors an explicit column-distance depth") {
    const auto path = temp_matrix_file("g1cd", catalog_get("(7,3,3;1)_2").matrix);
    auto r = run("analyze --matrix " + path + " --coldist 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["distance"]["coldist"].size() == 4);  // indices 0..3
    REQUIRE(r.body["results"]["distance"]["coldist"][0] == 4);
    REQUIRE(r.body["results"]["distance"]["coldist"][2] == 8);
}

TEST_CASE("analyze weight spectrum") {
    const auto path = temp_matrix_file("c526", catalog_get("(5,2,6;4)_2").matrix);
    auto r = run("analyze --matrix " + path + " --spectrum 14");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["spectrum"]["12"] == 10);
    REQUIRE(r.body["results"]["spectrum"]["14"] == 27);
    REQUIRE(r.body["results"]["spectrum_complete"] == true);
}

TEST_CASE("parse failures exit 2") {
    const std::string path = "/tmp/convcode_test_bad.txt";
    std::ofstream(path) << "field GF(2)\n1, z, oops\n";
    REQUIRE(run("analyze --matrix " + path).exit_code == 2);

    std::ofstream(path) << "1, z\n";  // missing header
    REQUIRE(run("analyze --matrix " + path).exit_code == 2);
}

TEST_CASE("cyclic autos") {
    auto r = run("cyclic autos --n 7 --q 2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["count"] == 18);
    REQUIRE(run("cyclic autos --n 4 --q 2").exit_code == 2);  // gcd(n, q) != 1
}

TEST_CASE("cyclic build reproduces the worked example") {
    auto r = run("cyclic build --n 7 --q 2 --sigma x^5 --g \"1+x^2+x^3+x^4 + z*(x+x^2+x^3+x^5)\"");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["direct_summand"] == true);
    REQUIRE(r.body["results"]["profile"]["id"] == "(7,3,3;1)_2");
    REQUIRE(r.body["results"]["distance"]["d_free"] == 8);
    const auto matrix_text = r.body["results"]["matrix"].get<std::string>();
    const auto parsed = parse_matrix_file(matrix_text);
    REQUIRE(parsed.matrix == catalog_get("(7,3,3;1)_2").matrix);

    REQUIRE(run("cyclic build --n 7 --q 2 --sigma x^2+x --g \"1+x\"").exit_code == 2);  // bad sigma
}

TEST_CASE("cyclic check") {
    const auto path = temp_matrix_file("g1c", catalog_get("(7,3,3;1)_2").matrix);
    auto yes = run("cyclic check --matrix " + path + " --sigma x^5");
    REQUIRE(yes.exit_code == 0);
    REQUIRE(yes.body["results"]["sigma_cyclic"] == true);
    auto no = run("cyclic check --matrix " + path + " --sigma x");
    REQUIRE(no.exit_code == 0);
    REQUIRE(no.body["results"]["sigma_cyclic"] == false);
}

TEST_CASE("catalog commands") {
    auto list = run("catalog list");
    REQUIRE(list.exit_code == 0);
    REQUIRE(list.body["results"]["count"] == 42);

    auto one = run("catalog verify \"(9,3,1;1)_8\"");
    REQUIRE(one.exit_code == 0);
    REQUIRE(one.body["results"]["all_pass"] == true);
    // not annotated as strongly MDS, but the computed flags say it is, at M = 1
    const auto& entry = one.body["results"]["entries"][0];
    REQUIRE(entry["mds"]["is_strongly_mds"] == true);
    REQUIRE(entry["mds"]["M"] == 1);
    REQUIRE(entry["stabilization_index"] == 1);

    REQUIRE(run("catalog verify no-such-id").exit_code == 2);
    REQUIRE(run("catalog verify").exit_code == 2);

    auto exp = run("catalog export --id \"(3,2,2;1)_5\"");
    REQUIRE(exp.exit_code == 0);
    const auto parsed = parse_matrix_file(exp.body["results"]["matrix"].get<std::string>());
    REQUIRE(parsed.matrix == catalog_get("(3,2,2;1)_5").matrix);
}

TEST_CASE("catalog verify --all passes and exits 0") {
    auto r = run("catalog verify --all");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["all_pass"] == true);
    REQUIRE(r.body["results"]["entries"].size() == 42);
}

TEST_CASE("non-minimal matrices are diagnosed, not rejected") {
    auto f2 = Field::get(2, 1);
    const auto g = parse_matrix_body(*f2, "1, z\nz, z^2+1");
    const auto path = temp_matrix_file("nonmin", g);
    auto r = run("analyze --matrix " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.body["results"]["profile"]["minimal"] == false);
    REQUIRE(r.body["results"]["profile"]["basic"] == true);
    REQUIRE_FALSE(r.body["results"].contains("distance"));
}

TEST_CASE("an exhausted search budget exits 2 with partial results marked") {
    const auto path = temp_matrix_file("budget", catalog_get("(5,2,6;4)_2").matrix);
    auto r = run("analyze --matrix " + path + " --spectrum 40 --budget-seconds 0.000001");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.body["status"] == "input_error");
    REQUIRE(r.body["results"]["spectrum_complete"] == false);

    // the environment variable supplies the default budget
    setenv("CONVCODE_BUDGET_SECONDS", "0.000001", 1);
    auto re = run("analyze --matrix " + path + " --spectrum 40");
    unsetenv("CONVCODE_BUDGET_SECONDS");
    REQUIRE(re.exit_code == 2);
    REQUIRE(re.body["results"]["spectrum_complete"] == false);
}

TEST_CASE("reports are byte-stable across runs") {
    const auto a = run("bounds --n 15 --k 4 --delta 12 --m 3 --q 2");
    const auto b = run("bounds --n 15 --k 4 --delta 12 --m 3 --q 2");
    REQUIRE(a.out == b.out);

    const auto path = temp_matrix_file("stable", catalog_get("(5,2,6;3)_2").matrix);
    const auto c = run("analyze --matrix " + path + " --spectrum 14");
    const auto d = run("analyze --matrix " + path + " --spectrum 14");
    REQUIRE(c.out == d.out);
}
