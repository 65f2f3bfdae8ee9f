#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "speclab/config.hpp"
#include "speclab/experiment.hpp"

using namespace speclab;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) {
    return std::string(SPECLAB_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("speclab_test_" + tag + "_" +
                                            std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SPECLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("config: valid distribution file parses with defaults applied") {
    const ExperimentConfig cfg = ExperimentConfig::parse_file(fixture("valid_distribution.cfg"));
    CHECK(cfg.kind == ExperimentKind::Distribution);
    CHECK(cfg.seed == 20240101);
    CHECK(cfg.quadrature_n == 512);
    CHECK(cfg.n_ladder == std::vector<std::size_t>{16, 32, 64});
    CHECK(cfg.test_functions.size() == 2);
    CHECK(cfg.background.k == 1);
}

TEST_CASE("config: syntax errors carry line numbers") {
    try {
        ExperimentConfig::parse_string("[experiment]\nkind distribution\n");
        FAIL("expected ConfigInvalid");
    } catch (const ConfigInvalid& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("config: unknown keys and sections are rejected") {
    CHECK_THROWS_AS(ExperimentConfig::parse_string("[experiment]\nkindest = distribution\n"),
                    ConfigInvalid);
    CHECK_THROWS_AS(ExperimentConfig::parse_string("[area51]\nx = 1\n"), ConfigInvalid);
    CHECK_THROWS_AS(ExperimentConfig::parse_string("stray = 1\n"), ConfigInvalid);
}

TEST_CASE("config: contract validation") {
    // ladder not increasing
    CHECK_THROWS_AS(ExperimentConfig::parse_string("[experiment]\nkind = distribution\n"
                                                   "[ladder]\nn = 64, 64\n"
                                                   "[tests]\nfunctions = monomial:2\n"),
                    ConfigInvalid);
    // rung above the cap
    CHECK_THROWS_AS(ExperimentConfig::parse_string("[experiment]\nkind = distribution\n"
                                                   "[ladder]\nn = 64, 8192\n"
                                                   "[tests]\nfunctions = monomial:2\n"),
                    ConfigInvalid);
    // nonpositive epsilon
    CHECK_THROWS_AS(ExperimentConfig::parse_string("[experiment]\nkind = cluster\n"
                                                   "[ladder]\nn = 16, 32\n"
                                                   "[epsilons]\nvalues = 0.5, -0.1\n"),
                    ConfigInvalid);
    // missing ladder for a ladder experiment
    CHECK_THROWS_AS(ExperimentConfig::parse_file(fixture("malformed_missing_ladder.cfg")),
                    ConfigInvalid);
    // unknown preset
    CHECK_THROWS_AS(ExperimentConfig::parse_string("[experiment]\nkind = norms\n"
                                                   "[sequence]\npreset = mystery\n"),
                    Error);
}

TEST_CASE("run_experiment: distribution writes both report files with matching content") {
    TempDir tmp("dist");
    ExperimentConfig cfg = ExperimentConfig::parse_file(fixture("valid_distribution.cfg"));
    cfg.output_dir = (tmp.path / "out").string();
    const RunResult res = run_experiment(cfg);
    CHECK(res.exit_code == 0);

    const fs::path csv_path = tmp.path / "out" / "report.csv";
    const fs::path json_path = tmp.path / "out" / "report.json";
    REQUIRE(fs::exists(csv_path));
    REQUIRE(fs::exists(json_path));

    // CSV is a projection of the JSON document
    const auto doc = nlohmann::json::parse(slurp(json_path));
    const std::string csv = slurp(csv_path);
    CHECK(doc["kind"] == "distribution");
    CHECK(doc["checks"]["all_passed"] == true);
    for (const auto& row : doc["csv"]["rows"]) {
        for (const auto& cell : row) {
            if (!cell.get<std::string>().empty())
                CHECK(csv.find(cell.get<std::string>()) != std::string::npos);
        }
    }
}

TEST_CASE("run_experiment: byte-identical CSV for identical config and seed") {
    TempDir tmp("det");
    ExperimentConfig cfg = ExperimentConfig::parse_file(fixture("valid_norms.cfg"));
    cfg.output_dir = (tmp.path / "a").string();
    run_experiment(cfg);
    cfg.output_dir = (tmp.path / "b").string();
    run_experiment(cfg);
    CHECK(slurp(tmp.path / "a" / "report.csv") == slurp(tmp.path / "b" / "report.csv"));
    CHECK(slurp(tmp.path / "a" / "report.json") == slurp(tmp.path / "b" / "report.json"));

    // a different seed must change the rows
    cfg.seed += 1;
    cfg.output_dir = (tmp.path / "c").string();
    run_experiment(cfg);
    CHECK(slurp(tmp.path / "a" / "report.csv") != slurp(tmp.path / "c" / "report.csv"));
}

TEST_CASE("run_experiment: norms checks pass for the honest constant and fail for c=1") {
    TempDir tmp("norms");
    ExperimentConfig ok = ExperimentConfig::parse_file(fixture("valid_norms.cfg"));
    ok.output_dir = (tmp.path / "ok").string();
    CHECK(run_experiment(ok).exit_code == 0);

    ExperimentConfig bad = ExperimentConfig::parse_file(fixture("failing_norms.cfg"));
    bad.output_dir = (tmp.path / "bad").string();
    const RunResult res = run_experiment(bad);
    CHECK(res.exit_code == 2);
    CHECK(!res.report.checks_passed);
    // reports are still written on check failure
    CHECK(fs::exists(tmp.path / "bad" / "report.csv"));
}

TEST_CASE("run_experiment: blockcheck on a gapped background") {
    TempDir tmp("block");
    ExperimentConfig cfg = ExperimentConfig::parse_file(fixture("valid_blockcheck.cfg"));
    cfg.output_dir = (tmp.path / "out").string();
    const RunResult res = run_experiment(cfg);
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp(tmp.path / "out" / "report.json"));
    CHECK(doc["essential_range"].size() == 2);  // spectral gap: two intervals
}

TEST_CASE("run_experiment: cluster and attract kinds produce ladders of rows") {
    TempDir tmp("ca");
    ExperimentConfig cfg = ExperimentConfig::parse_string(
        "[experiment]\nkind = cluster\nseed = 3\n"
        "[sequence]\npreset = cesaro_demo\n"
        "[ladder]\nn = 32, 64\n"
        "[epsilons]\nvalues = 0.25, 0.5\n");
    cfg.output_dir = (tmp.path / "cluster").string();
    CHECK(run_experiment(cfg).exit_code == 0);
    const auto cdoc = nlohmann::json::parse(slurp(tmp.path / "cluster" / "report.json"));
    CHECK(cdoc["csv"]["rows"].size() == 4);  // 2 epsilons x 2 rungs

    ExperimentConfig att = ExperimentConfig::parse_string(
        "[experiment]\nkind = attract\nseed = 3\n"
        "[sequence]\npreset = trace_class_demo\n"
        "[ladder]\nn = 32, 64\n"
        "[attract]\npoints = 0, 2, 1:0.5\nj_max = 2\n");
    att.output_dir = (tmp.path / "attract").string();
    CHECK(run_experiment(att).exit_code == 0);
    const auto adoc = nlohmann::json::parse(slurp(tmp.path / "attract" / "report.json"));
    CHECK(adoc["csv"]["rows"].size() == 3 * 2 * 2);  // points x rungs x j_max
    CHECK(adoc["points"].size() == 3);
}

TEST_CASE("list_presets is stable and complete") {
    const std::string a = list_presets();
    const std::string b = list_presets();
    CHECK(a == b);
    CHECK(a.find("trace_class_demo") != std::string::npos);
    CHECK(a.find("cesaro_demo") != std::string::npos);
    CHECK(a.find("compact_demo") != std::string::npos);
    CHECK(a.find("rank_one_demo") != std::string::npos);
    CHECK(a.find("distribution") != std::string::npos);
}

TEST_CASE("cli binary: exit code contract on the fixture set") {
    TempDir tmp("exit");
    CHECK(run_cli("presets") == 0);
    CHECK(run_cli("") == 1);
    CHECK(run_cli("frobnicate") == 1);
    CHECK(run_cli("run") == 1);
    CHECK(run_cli("run /nonexistent/path.cfg") == 1);

    const std::string out = (tmp.path / "ok").string();
    CHECK(run_cli("run " + fixture("valid_norms.cfg") + " --out " + out) == 0);
    CHECK(fs::exists(fs::path(out) / "report.csv"));

    CHECK(run_cli("run " + fixture("failing_norms.cfg") + " --out " + (tmp.path / "bad").string()) ==
          2);

    const std::string mal_out = (tmp.path / "mal").string();
    CHECK(run_cli("run " + fixture("malformed_missing_ladder.cfg") + " --out " + mal_out) == 1);
    CHECK(!fs::exists(fs::path(mal_out) / "report.csv"));  // nothing written on config errors
    CHECK(run_cli("run " + fixture("malformed_syntax.cfg") + " --out " + mal_out) == 1);
    CHECK(!fs::exists(fs::path(mal_out)));
}

TEST_CASE("cli binary: --seed override changes the report") {
    TempDir tmp("seed");
    const std::string a = (tmp.path / "a").string();
    const std::string b = (tmp.path / "b").string();
    CHECK(run_cli("run " + fixture("valid_norms.cfg") + " --out " + a + " --seed 1") == 0);
    CHECK(run_cli("run " + fixture("valid_norms.cfg") + " --out " + b + " --seed 2") == 0);
    CHECK(slurp(fs::path(a) / "report.csv") != slurp(fs::path(b) / "report.csv"));
}
