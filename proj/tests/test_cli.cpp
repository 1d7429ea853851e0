#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "maxplus/io.hpp"

using maxplus::io::Json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string scratch(const std::string& name) {
    return "/tmp/frechet_cli_test_" + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("FRECHET_CLI");
    REQUIRE(cli != nullptr);
    std::string out_path = scratch("stdout");
    std::string err_path = scratch("stderr");
    std::string command = std::string("\"") + cli + "\" " + args + " > " +
                          out_path + " 2> " + err_path;
    int status = std::system(command.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = read_file(out_path);
    res.err = read_file(err_path);
    return res;
}

const char* kInstance3x3 =
    R"({"p": ["0.2", "0.5", "0.3"], "q": ["0.4", "0.4", "0.2"]})";

}  // namespace

TEST_CASE("bounds reproduces the worked example as exact JSON") {
    std::string in = scratch("inst.json");
    write_file(in, kInstance3x3);
    RunResult res = run_cli("bounds --input " + in);
    REQUIRE(res.exit_code == 0);

    Json doc = Json::parse(res.out);
    CHECK(doc["n"] == 3);
    CHECK(doc["m"] == 3);
    CHECK(doc["sigma"] == Json("1"));
    CHECK(doc["upper_cumulative"] ==
          Json({{"0.2", "0.2", "0.2"}, {"0.4", "0.7", "0.7"},
                {"0.4", "0.8", "1"}}));
    CHECK(doc["lower_cumulative"] ==
          Json({{"0", "0", "0.2"}, {"0.1", "0.5", "0.7"},
                {"0.4", "0.8", "1"}}));
    CHECK(doc["upper_table"] ==
          Json({{"0.2", "0", "0"}, {"0.2", "0.3", "0"},
                {"0", "0.1", "0.2"}}));
    CHECK(doc["lower_table"] ==
          Json({{"0", "0", "0.2"}, {"0.1", "0.4", "0"},
                {"0.3", "0", "0"}}));
}

TEST_CASE("bounds on a single category is four copies of the mass") {
    std::string in = scratch("single.csv");
    write_file(in, "1\n1\n");
    RunResult res = run_cli("bounds --input " + in + " --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out ==
          "# n,m,sigma\n1,1,1\n"
          "# upper_cumulative\n1\n"
          "# lower_cumulative\n1\n"
          "# upper_table\n1\n"
          "# lower_table\n1\n");
}

TEST_CASE("bounds rejects mismatched totals naming both sums") {
    std::string in = scratch("infeasible.csv");
    write_file(in, "0.6\n0.5\n");
    RunResult res = run_cli("bounds --input " + in + " --format csv");
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("0.6") != std::string::npos);
    CHECK(res.err.find("0.5") != std::string::npos);
}

TEST_CASE("bounds output is byte-identical across runs") {
    std::string in = scratch("inst.json");
    write_file(in, kInstance3x3);
    RunResult a = run_cli("bounds --input " + in);
    RunResult b = run_cli("bounds --input " + in);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 0);
}

TEST_CASE("bounds honors --output") {
    std::string in = scratch("inst.json");
    std::string out = scratch("bounds.json");
    write_file(in, kInstance3x3);
    RunResult direct = run_cli("bounds --input " + in);
    RunResult filed = run_cli("bounds --input " + in + " --output " + out);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(read_file(out) == direct.out);
}

TEST_CASE("check accepts a member and rejects a perturbed table") {
    std::string in = scratch("member.json");
    write_file(in, R"({"p": ["0.2", "0.5", "0.3"], "q": ["0.4", "0.4", "0.2"],
        "table": [["0.2", "0", "0"], ["0.2", "0.3", "0"],
                  ["0", "0.1", "0.2"]]})");
    RunResult res = run_cli("check --input " + in);
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    CHECK(doc["member"] == Json(true));
    CHECK(doc["tropical_member"] == Json(true));
    CHECK(doc["lower_ok"] == Json(true));
    CHECK(doc["upper_ok"] == Json(true));

    write_file(in, R"({"p": ["0.2", "0.5", "0.3"], "q": ["0.4", "0.4", "0.2"],
        "table": [["0.3", "0", "0"], ["0.2", "0.3", "0"],
                  ["0", "0.1", "0.2"]]})");
    RunResult bad = run_cli("check --input " + in);
    CHECK(bad.exit_code == 1);
    CHECK(Json::parse(bad.out)["member"] == Json(false));
}

TEST_CASE("check accepts the zero table of a zero instance") {
    std::string in = scratch("zero.csv");
    write_file(in, "0,0\n0,0\n0,0\n0,0\n");
    RunResult res = run_cli("check --input " + in + " --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("member,true") != std::string::npos);
}

TEST_CASE("emitted bounds tables pass a follow-up membership check") {
    std::string in = scratch("inst.json");
    write_file(in, kInstance3x3);
    RunResult res = run_cli("bounds --input " + in);
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);

    for (const char* key : {"upper_table", "lower_table"}) {
        Json check_input{{"p", Json::parse(kInstance3x3)["p"]},
                         {"q", Json::parse(kInstance3x3)["q"]},
                         {"table", doc[key]}};
        std::string path = scratch("recheck.json");
        write_file(path, check_input.dump());
        RunResult verdict = run_cli("check --input " + path);
        CHECK(verdict.exit_code == 0);
    }
}

TEST_CASE("sample is deterministic per seed and verdicts pass") {
    std::string in = scratch("inst.json");
    write_file(in, kInstance3x3);

    RunResult a = run_cli("sample --input " + in + " --count 1 --seed 9");
    RunResult b = run_cli("sample --input " + in + " --count 1 --seed 9");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult many = run_cli("sample --input " + in + " --count 100 --seed 4");
    REQUIRE(many.exit_code == 0);
    Json doc = Json::parse(many.out);
    REQUIRE(doc["samples"].size() == 100);
    for (const Json& s : doc["samples"]) {
        CHECK(s["member"] == Json(true));
        CHECK(s["lower_ok"] == Json(true));
        CHECK(s["upper_ok"] == Json(true));
    }
}

TEST_CASE("sample rejects infeasible marginals") {
    std::string in = scratch("infeasible.csv");
    write_file(in, "0.6\n0.5\n");
    CHECK(run_cli("sample --input " + in + " --format csv --count 1")
              .exit_code == 1);
}

TEST_CASE("verify passes on this build") {
    RunResult res = run_cli("verify --count 40 --seed 12");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    CHECK(doc["ok"] == Json(true));
    CHECK(doc["suites"].size() == 6);
    for (const Json& s : doc["suites"]) CHECK(s["failures"] == Json(0));
}

TEST_CASE("verify with zero iterations warns and passes") {
    RunResult res = run_cli("verify --count 0");
    CHECK(res.exit_code == 0);
    CHECK(res.err.find("vacuous") != std::string::npos);
}

TEST_CASE("residuate solves the worked quotients") {
    std::string in = scratch("resid.json");
    write_file(in, R"({"A": [["0"], ["0"]], "B": [["3"], ["5"]]})");
    RunResult res = run_cli("residuate --input " + in + " --side left");
    REQUIRE(res.exit_code == 0);
    CHECK(Json::parse(res.out)["result"] == Json({{"3"}}));

    write_file(in, R"({"A": [["3"], ["5"]], "B": [["0"]]})");
    RunResult right = run_cli("residuate --input " + in + " --side right");
    REQUIRE(right.exit_code == 0);
    CHECK(Json::parse(right.out)["result"] == Json({{"3"}, {"5"}}));
}

TEST_CASE("residuating by the identity returns the dividend") {
    std::string in = scratch("resid_id.json");
    write_file(in, R"({"A": [["0", "-inf"], ["-inf", "0"]],
                       "B": [["1", "2"], ["3", "-inf"]]})");
    RunResult res = run_cli("residuate --input " + in + " --side left");
    REQUIRE(res.exit_code == 0);
    Json expected = Json::array(
        {Json::array({"1", "2"}), Json::array({"3", "-inf"})});
    CHECK(Json::parse(res.out)["result"] == expected);
}

TEST_CASE("residuate rejects mismatched shapes") {
    std::string in = scratch("resid_bad.json");
    write_file(in, R"({"A": [["0"], ["0"]], "B": [["3"]]})");
    CHECK(run_cli("residuate --input " + in + " --side left").exit_code == 2);
}

TEST_CASE("input errors exit with code 2") {
    std::string in = scratch("garbage.csv");
    write_file(in, "x,y\n1\n");
    CHECK(run_cli("bounds --input " + in + " --format csv").exit_code == 2);
    CHECK(run_cli("bounds").exit_code == 2);  // no input file
    CHECK(run_cli("bounds --input /nonexistent/path").exit_code == 2);
    CHECK(run_cli("bounds --format xml --input " + in).exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);

    std::string nocsv = scratch("short.csv");
    write_file(nocsv, "1\n");
    CHECK(run_cli("bounds --input " + nocsv + " --format csv").exit_code == 2);
}

TEST_CASE("float mode emits JSON numbers") {
    std::string in = scratch("inst.json");
    write_file(in, kInstance3x3);
    RunResult res = run_cli("bounds --input " + in + " --mode float");
    REQUIRE(res.exit_code == 0);
    Json doc = Json::parse(res.out);
    CHECK(doc["sigma"].is_number());
    CHECK(doc["sigma"].get<double>() == Catch::Approx(1.0));
    CHECK(doc["upper_cumulative"][0][0].get<double>() == Catch::Approx(0.2));
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
}
