#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

// Runs the built binary through the shell, capturing stdout (and stderr when
// merge_stderr is set).
CliResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(ADJQ_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() /
               ("adjq_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string write(const std::string& name, const std::string& content) const {
        const fs::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p.string();
    }

private:
    fs::path dir_;
};

const char* kBracketHandicap = R"({"cut_points":[0.5,0.9],"values":[0.0,5.0,"inf"]})";

}  // namespace

TEST_CASE("stat computes the bracket-cutoff example deterministically") {
    TempDir tmp;
    const std::string samples = tmp.write("samples.csv", "0\n10\n");
    const std::string handicap = tmp.write("handicap.json", kBracketHandicap);

    const std::string args = "stat --input " + samples + " --handicap " + handicap;
    const CliResult first = run_cli(args);
    REQUIRE(first.exit_code == 0);

    const json report = json::parse(first.out);
    CHECK(report["statistic_value"] == 5.0);
    CHECK(report["binding_alpha"] == 0.9);
    CHECK(report["binding_quantile"] == 10.0);
    CHECK(report["representation_crosscheck"] == "pass");

    const CliResult second = run_cli(args);
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
}

TEST_CASE("stat handles quantile specs and JSON input") {
    TempDir tmp;
    const std::string samples = tmp.write("samples.csv", "1\n2\n3\n4\n");
    const CliResult r = run_cli("stat --input " + samples + " --quantile 0.5");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(report["statistic_value"] == 2.0);
    CHECK(report["binding_alpha"] == 0.5);

    const std::string cdf =
        tmp.write("cdf.json", R"({"breakpoints":[0.0,10.0],"levels":[0.5,1.0]})");
    const std::string handicap = tmp.write("handicap.json", kBracketHandicap);
    const CliResult rj =
        run_cli("stat --input " + cdf + " --format json --handicap " + handicap);
    REQUIRE(rj.exit_code == 0);
    CHECK(json::parse(rj.out)["statistic_value"] == 5.0);
}

TEST_CASE("stat supports weighted CSV input") {
    TempDir tmp;
    const std::string samples = tmp.write("weighted.csv", "1,0.3\n2,0.7\n");
    const CliResult r = run_cli("stat --input " + samples + " --quantile 0.5");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["statistic_value"] == 2.0);
}

TEST_CASE("malformed CSV names the offending line and exits 1") {
    TempDir tmp;
    const std::string samples = tmp.write("bad.csv", "1\nnot_a_number\n");
    const CliResult r = run_cli("stat --input " + samples + " --quantile 0.5", true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find(":2:") != std::string::npos);

    const std::string mixed = tmp.write("mixed.csv", "1\n2,0.5\n");
    const CliResult rm = run_cli("stat --input " + mixed + " --quantile 0.5", true);
    CHECK(rm.exit_code == 1);
    CHECK(rm.out.find(":2:") != std::string::npos);
}

TEST_CASE("invalid statistic objects exit 1 with the violated invariant") {
    TempDir tmp;
    const std::string samples = tmp.write("samples.csv", "0\n10\n");
    const std::string bad =
        tmp.write("bad.json", R"({"cut_points":[0.5,0.9],"values":[5.0,0.0,"inf"]})");
    const CliResult r = run_cli("stat --input " + samples + " --handicap " + bad, true);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("ValidationError") != std::string::npos);
}

TEST_CASE("convert emits the converted object plus a round-trip flag") {
    TempDir tmp;
    const std::string shape = tmp.write(
        "shape.json", R"({"jump_points":[0.0,2.0],"jump_levels":[0.3,0.6]})");
    const CliResult r = run_cli("convert --shape " + shape + " --to handicap");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(report["round_trip_ok"] == true);
    CHECK(report["result"]["cut_points"] == json::array({0.3, 0.6}));
    CHECK(report["result"]["values"] == json::array({0.0, 2.0, "inf"}));

    const CliResult rq = run_cli("convert --quantile 0.25 --to dual-handicap");
    REQUIRE(rq.exit_code == 0);
    const json dq = json::parse(rq.out);
    CHECK(dq["round_trip_ok"] == true);
    CHECK(dq["result"]["cut_points"] == json::array({0.75}));
    CHECK(dq["result"]["values"] == json::array({"-inf", 0.0}));
}

TEST_CASE("lattice and coupling reports") {
    TempDir tmp;
    const std::string a = tmp.write("a.csv", "0\n1\n");
    const std::string b = tmp.write("b.csv", "2\n5\n");

    const CliResult rl = run_cli("lattice " + a + " " + b);
    REQUIRE(rl.exit_code == 0);
    const json lattice = json::parse(rl.out);
    CHECK(lattice["join"]["breakpoints"] == json::array({2.0, 5.0}));
    CHECK(lattice["meet"]["breakpoints"] == json::array({0.0, 1.0}));

    const CliResult rc = run_cli("coupling " + a + " " + b);
    REQUIRE(rc.exit_code == 0);
    const json coupling = json::parse(rc.out);
    CHECK(coupling["comonotonic"] == true);
    CHECK(coupling["marginals_reproduced"] == true);
    CHECK(coupling["join_matches"] == true);
    CHECK(coupling["meet_matches"] == true);
    CHECK(coupling["coupling"]["outcomes"] ==
          json::array({json::array({0.5, 0.0, 2.0}), json::array({0.5, 1.0, 5.0})}));
}

TEST_CASE("check runs the suite and reflects failures in the exit code") {
    const CliResult ok = run_cli("check --seed 7 --trials 1");
    REQUIRE(ok.exit_code == 0);
    const json report = json::parse(ok.out);
    CHECK(report["total_failures"] == 0);
    CHECK(report["master_seed"] == 7);
    CHECK(report["checks"].is_array());
    CHECK(report["checks"].size() >= 20);

    const CliResult again = run_cli("check --seed 7 --trials 1");
    CHECK(again.out == ok.out);

    const CliResult bad = run_cli("check --seed 7 --trials 40 --inject-mean");
    CHECK(bad.exit_code == 2);
    const json bad_report = json::parse(bad.out);
    CHECK(bad_report["total_failures"].get<int>() > 0);
}

TEST_CASE("ADJQ_SEED provides the default seed") {
    const CliResult r = run_cli("check --trials 1", false, "ADJQ_SEED=123 ");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["master_seed"] == 123);

    const CliResult bad = run_cli("check --trials 1", true, "ADJQ_SEED=oops ");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("ADJQ_SEED") != std::string::npos);
}

TEST_CASE("explain tabulates candidate cells and marks the binding one") {
    TempDir tmp;
    const std::string samples = tmp.write("samples.csv", "0\n10\n");
    const std::string handicap = tmp.write("handicap.json", kBracketHandicap);
    const CliResult r =
        run_cli("explain --handicap " + handicap + " --input " + samples);
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.out);
    CHECK(report["kind"] == "handicap");
    CHECK(report["equivalents"].contains("dual_handicap"));
    CHECK(report["input"]["statistic_value"] == 5.0);

    bool saw_binding = false;
    for (const auto& cell : report["input"]["cells"]) {
        if (cell["binding"] == true) {
            saw_binding = true;
            CHECK(cell["alpha"] == 0.9);
            CHECK(cell["adjusted"] == 5.0);
        }
    }
    CHECK(saw_binding);
}

TEST_CASE("stat requires exactly one statistic spec") {
    TempDir tmp;
    const std::string samples = tmp.write("samples.csv", "0\n10\n");
    const CliResult none = run_cli("stat --input " + samples, true);
    CHECK(none.exit_code == 1);

    const std::string handicap = tmp.write("handicap.json", kBracketHandicap);
    const CliResult both = run_cli(
        "stat --input " + samples + " --handicap " + handicap + " --quantile 0.5", true);
    CHECK(both.exit_code == 1);
}

TEST_CASE("output flag writes the report to a file") {
    TempDir tmp;
    const std::string samples = tmp.write("samples.csv", "1\n2\n3\n4\n");
    const std::string out_path = tmp.write("report.json", "");
    const CliResult r =
        run_cli("stat --input " + samples + " --quantile 0.5 --output " + out_path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    json report;
    in >> report;
    CHECK(report["statistic_value"] == 2.0);
}
