#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "mecsched/config_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() /
                         ("mecsched_cli_test_" + std::to_string(::getpid()) + "_" +
                          std::to_string(counter++));
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    const fs::path dir = scratch_dir();
    const fs::path out_file = dir / "out.txt";
    const fs::path err_file = dir / "err.txt";
    const std::string cmd = std::string(MECSCHED_CLI_PATH) + " " + args + " > " +
                            out_file.string() + " 2> " + err_file.string();
    const int status = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = mecsched::read_text_file(out_file.string());
    res.err = mecsched::read_text_file(err_file.string());
    return res;
}

std::string write_json(const fs::path& dir, const std::string& name, const json& j) {
    const fs::path p = dir / name;
    mecsched::write_text_file(p.string(), j.dump());
    return p.string();
}

}  // namespace

TEST_CASE("solve: single task emits the identity order and a descent trace") {
    const fs::path dir = scratch_dir();
    const std::string cfg =
        write_json(dir, "cfg.json", json{{"n_tasks", 1}, {"seed", 3}, {"eta", 10.0}});
    const CliResult res = run_cli("--config " + cfg + " solve");
    REQUIRE(res.exit_code == 0);
    const json out = json::parse(res.out);
    CHECK(out.at("order") == json::array({1}));
    CHECK(out.at("weighted_s").get<double>() > 0.0);
    const auto trace = out.at("trace_weighted_s").get<std::vector<double>>();
    for (std::size_t i = 1; i < trace.size(); ++i) {
        CHECK(trace[i] <= trace[i - 1] + 1e-9);
    }
    CHECK(out.at("converged").get<bool>());
}

TEST_CASE("oracle: oversized request fails with the documented code and error object") {
    const CliResult res = run_cli("oracle --n 12");
    CHECK(res.exit_code == 3);
    const json err = json::parse(res.err);
    CHECK(err.at("error").at("type") == "cap_exceeded");
}

TEST_CASE("oracle: small joint search succeeds") {
    const fs::path dir = scratch_dir();
    const std::string cfg =
        write_json(dir, "cfg.json", json{{"n_tasks", 2}, {"seed", 5}, {"eta", 10.0}});
    const CliResult res = run_cli("--config " + cfg + " oracle --mode joint --grid 120");
    REQUIRE(res.exit_code == 0);
    const json out = json::parse(res.out);
    CHECK(out.at("best_value_s").get<double>() > 0.0);
    CHECK(out.at("evaluations").get<std::uint64_t>() == 2ull * 120ull * 120ull);
}

TEST_CASE("schedule and power round-trip on an explicit instance") {
    const fs::path dir = scratch_dir();
    const json instance = {{"d_bits", {1500.0, 400.0, 900.0}},
                           {"c_cycles_per_bit", {700.0, 1200.0, 300.0}},
                           {"eta", 10.0}};
    const std::string inst_path = write_json(dir, "instance.json", instance);
    const std::string power_path =
        write_json(dir, "power.json", json{{"powers_w", {0.1, 0.1, 0.1}}});

    const CliResult sched = run_cli("schedule --instance " + inst_path + " --power " +
                                    power_path);
    REQUIRE(sched.exit_code == 0);
    const json sched_out = json::parse(sched.out);
    const auto order = sched_out.at("order").get<std::vector<int>>();
    REQUIRE(order.size() == 3);
    CHECK(sched_out.at("makespan_s").get<double>() > 0.0);

    const std::string sigma_path =
        write_json(dir, "sigma.json", json{{"order", order}});
    const CliResult power =
        run_cli("power --instance " + inst_path + " --sigma " + sigma_path);
    REQUIRE(power.exit_code == 0);
    const json power_out = json::parse(power.out);
    const auto powers = power_out.at("powers_w").get<std::vector<double>>();
    REQUIRE(powers.size() == 3);
    for (double p : powers) {
        CHECK(p > 0.0);
        CHECK(p <= 0.1 + 1e-15);
    }
    CHECK(power_out.at("eta").get<double>() == 10.0);
}

TEST_CASE("malformed config exits with code 2 and a config error object") {
    const fs::path dir = scratch_dir();
    const fs::path bad = dir / "bad.json";
    mecsched::write_text_file(bad.string(), "{nope");
    const CliResult res = run_cli("--config " + bad.string() + " solve");
    CHECK(res.exit_code == 2);
    CHECK(json::parse(res.err).at("error").at("type") == "config");
}

TEST_CASE("unknown experiment name exits with code 2") {
    CHECK(run_cli("experiment fig9").exit_code == 2);
}

TEST_CASE("experiment runs are byte-identical for a fixed seed") {
    const fs::path a = scratch_dir();
    const fs::path b = scratch_dir();
    // trimmed sweep: determinism is what matters here
    const fs::path cfgp = a / "cfg.json";
    mecsched::write_text_file(cfgp.string(), json{{"n_tasks", 4}}.dump());
    const CliResult ra = run_cli("--config " + cfgp.string() +
                                 " --seed 7 experiment fig2 --replicates 6 --out " +
                                 a.string());
    const CliResult rb = run_cli("--config " + cfgp.string() +
                                 " --seed 7 experiment fig2 --replicates 6 --out " +
                                 b.string());
    REQUIRE(ra.exit_code == 0);
    REQUIRE(rb.exit_code == 0);
    CHECK(mecsched::read_text_file((a / "fig2.csv").string()) ==
          mecsched::read_text_file((b / "fig2.csv").string()));
    CHECK(mecsched::read_text_file((a / "fig2.meta.json").string()) ==
          mecsched::read_text_file((b / "fig2.meta.json").string()));
}

TEST_CASE("validate subcommand finishes clean") {
    CHECK(run_cli("validate").exit_code == 0);
}
