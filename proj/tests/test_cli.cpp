#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "run_config.hpp"

#include "convdom/coefficients.hpp"
#include "convdom/lattice.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using convdom::cli::RunConfig;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("analyze runs are byte-identical across repeats") {
    RunConfig cfg;
    cfg.command = "analyze";
    cfg.family = "ball";
    cfg.degree = 80;
    cfg.directions = 9;
    cfg.grid = 7;
    const auto d1 = fresh_dir("convdom_cli_a"), d2 = fresh_dir("convdom_cli_b");
    cfg.out = d1.string();
    REQUIRE(convdom::cli::run(cfg) == 0);
    cfg.out = d2.string();
    REQUIRE(convdom::cli::run(cfg) == 0);
    for (const auto& name : {"h_samples.csv", "psi_grid.csv", "radial_slices.csv"}) {
        CHECK(slurp(d1 / name) == slurp(d2 / name));
        CHECK(!slurp(d1 / name).empty());
    }
    CHECK(fs::exists(d1 / "profile_abs.svg"));
    CHECK(fs::exists(d1 / "profile_log.svg"));
}

TEST_CASE("input problems exit with code 2") {
    RunConfig cfg;
    cfg.command = "analyze";
    cfg.family = "no_such_family";
    cfg.out = fresh_dir("convdom_cli_bad").string();
    CHECK(convdom::cli::run(cfg) == 2);

    RunConfig hull;
    hull.command = "hull";
    hull.out = cfg.out;
    CHECK(convdom::cli::run(hull) == 2); // missing --polydiscs
}

TEST_CASE("numerical failures exit with code 3") {
    // a coefficient table that cannot feed the requested degree window
    const auto dir = fresh_dir("convdom_cli_numfail");
    const auto table = dir / "low.jsonl";
    {
        std::ofstream out(table);
        out << R"({"J":[1,0],"log_c":0.0})" << "\n";
    }
    RunConfig cfg;
    cfg.command = "analyze";
    cfg.coeffs_path = table.string();
    cfg.degree = 60;
    cfg.out = (dir / "out").string();
    CHECK(convdom::cli::run(cfg) == 3);
}

TEST_CASE("hull command writes the domain description") {
    RunConfig cfg;
    cfg.command = "hull";
    cfg.polydiscs = "1,2;2,1";
    const auto dir = fresh_dir("convdom_cli_hull");
    cfg.out = dir.string();
    REQUIRE(convdom::cli::run(cfg) == 0);
    const auto text = slurp(dir / "domain.json");
    CHECK(text.find("halfspaces") != std::string::npos);
    CHECK(fs::exists(dir / "hull.svg"));
}

TEST_CASE("synthesize emits a loadable series and a round-trip table") {
    RunConfig cfg;
    cfg.command = "synthesize";
    cfg.domain = "ball";
    cfg.directions = 6;
    cfg.precision = 10;
    const auto dir = fresh_dir("convdom_cli_syn");
    cfg.out = dir.string();
    REQUIRE(convdom::cli::run(cfg) == 0);
    const auto oracle = convdom::load_table((dir / "series.jsonl").string());
    CHECK(oracle.dimension() == 2);
    const auto rt = slurp(dir / "roundtrip.csv");
    CHECK(rt.find("h_spec") != std::string::npos);
}

TEST_CASE("blowup and recover and stardom commands produce their reports") {
    const auto dir = fresh_dir("convdom_cli_misc");
    RunConfig blow;
    blow.command = "blowup";
    blow.domain = "polydisc";
    blow.point = {1.0, 0.3};
    blow.stages = 5;
    blow.out = (dir / "blow").string();
    REQUIRE(convdom::cli::run(blow) == 0);
    CHECK(slurp(dir / "blow" / "stages.csv").find("sup_bound") != std::string::npos);

    RunConfig rec;
    rec.command = "recover";
    rec.index = {2, 3};
    rec.nodes = 64;
    rec.out = (dir / "rec").string();
    REQUIRE(convdom::cli::run(rec) == 0);
    CHECK(slurp(dir / "rec" / "coefficients.csv").find("cauchy_ok") != std::string::npos);

    RunConfig star;
    star.command = "stardom";
    star.domain = "polydisc:1,2";
    star.rays = 12;
    star.out = (dir / "star").string();
    REQUIRE(convdom::cli::run(star) == 0);
    CHECK(slurp(dir / "star" / "rays.csv").find("gauge") != std::string::npos);
}

TEST_CASE("config files round trip and flags win over them") {
    RunConfig cfg;
    cfg.command = "analyze";
    cfg.family = "scaled:2";
    cfg.degree = 44;
    const auto text = cfg.to_json();
    const auto back = RunConfig::from_json(text);
    CHECK(back.family == "scaled:2");
    CHECK(back.degree == 44);

    // drive the installed binary once: config supplies the family, the flag
    // overrides the output directory
    const auto dir = fresh_dir("convdom_cli_bin");
    const auto cfg_path = dir / "run.json";
    {
        std::ofstream out(cfg_path);
        RunConfig file_cfg;
        file_cfg.family = "geometric";
        file_cfg.degree = 40;
        file_cfg.directions = 5;
        file_cfg.grid = 5;
        out << file_cfg.to_json();
    }
    std::ostringstream cmd;
    cmd << CONVDOM_TOOL_PATH << " analyze --config " << cfg_path.string() << " --out "
        << (dir / "out").string() << " > /dev/null 2>&1";
    CHECK(std::system(cmd.str().c_str()) == 0);
    CHECK(fs::exists(dir / "out" / "h_samples.csv"));

    std::ostringstream bad;
    bad << CONVDOM_TOOL_PATH << " analyze --family nope --out " << (dir / "bad").string()
        << " > /dev/null 2>&1";
    const int rc = std::system(bad.str().c_str());
    CHECK(WEXITSTATUS(rc) == 2);
}
