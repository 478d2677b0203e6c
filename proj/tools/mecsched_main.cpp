// Command-line front end: solve instances, run the reference oracles and
// reproduce the three experiment sweeps as CSV + metadata files.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mecsched/altmin.hpp"
#include "mecsched/config_io.hpp"
#include "mecsched/errors.hpp"
#include "mecsched/experiments.hpp"
#include "mecsched/flowshop.hpp"
#include "mecsched/oracle.hpp"
#include "mecsched/power_solver.hpp"
#include "mecsched/timeline.hpp"
#include "mecsched/version.hpp"

namespace {

using mecsched::RunConfig;
using ordered_json = nlohmann::ordered_json;

RunConfig load_config(const std::string& config_path, std::optional<std::uint64_t> seed,
                      std::optional<double> eta, std::optional<int> n_tasks) {
    RunConfig cfg = config_path.empty()
                        ? mecsched::default_run_config()
                        : mecsched::parse_run_config(mecsched::read_text_file(config_path));
    if (seed) {
        cfg.instance.seed = *seed;
    }
    if (eta) {
        if (*eta < 0.0) {
            throw mecsched::ConfigError("--eta must be nonnegative");
        }
        cfg.eta = *eta;
    }
    if (n_tasks) {
        if (!cfg.explicit_d_bits.empty()) {
            throw mecsched::ConfigError("--n cannot override explicit task arrays");
        }
        cfg.instance.n_tasks = *n_tasks;
        cfg.instance.validate();
    }
    return cfg;
}

std::vector<int> to_one_based(const std::vector<int>& order) {
    std::vector<int> out(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        out[i] = order[i] + 1;
    }
    return out;
}

mecsched::Schedule from_one_based(const std::vector<int>& order) {
    std::vector<int> zero(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        zero[i] = order[i] - 1;
    }
    return mecsched::Schedule(std::move(zero));
}

mecsched::PowerAllocation read_power_file(const std::string& path,
                                          const mecsched::Instance& inst) {
    ordered_json j;
    try {
        j = ordered_json::parse(mecsched::read_text_file(path));
        mecsched::PowerAllocation p{j.at("powers_w").get<std::vector<double>>()};
        if (p.size() != inst.n()) {
            throw mecsched::ConfigError("power file length does not match the instance");
        }
        p.validate(inst.channel);
        return p;
    } catch (const mecsched::ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw mecsched::ConfigError(std::string("bad power file: ") + e.what());
    }
}

mecsched::Schedule read_sigma_file(const std::string& path, const mecsched::Instance& inst) {
    try {
        const auto j = ordered_json::parse(mecsched::read_text_file(path));
        const auto order = j.at("order").get<std::vector<int>>();
        if (static_cast<int>(order.size()) != inst.n()) {
            throw mecsched::ConfigError("schedule file length does not match the instance");
        }
        return from_one_based(order);
    } catch (const mecsched::ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw mecsched::ConfigError(std::string("bad schedule file: ") + e.what());
    }
}

void emit(const ordered_json& j) { std::printf("%s\n", j.dump(2).c_str()); }

int run_schedule(const std::string& instance_path, const std::string& power_path,
                 std::optional<std::uint64_t> seed) {
    RunConfig cfg = mecsched::parse_run_config(mecsched::read_text_file(instance_path));
    if (seed) {
        cfg.instance.seed = *seed;
    }
    const mecsched::Instance inst = mecsched::realize_instance(cfg);
    const mecsched::PowerAllocation p = read_power_file(power_path, inst);
    const mecsched::Schedule sigma = mecsched::johnson_schedule(inst, p);
    ordered_json out;
    out["tool"] = std::string(mecsched::kVersionString);
    out["order"] = to_one_based(sigma.order());
    out["makespan_s"] = mecsched::timeline(sigma, p, inst).makespan_s;
    emit(out);
    return 0;
}

int run_power(const std::string& instance_path, const std::string& sigma_path,
              std::optional<double> eta_flag, std::optional<std::uint64_t> seed) {
    RunConfig cfg = mecsched::parse_run_config(mecsched::read_text_file(instance_path));
    if (eta_flag) {
        cfg.eta = *eta_flag;
    }
    if (seed) {
        cfg.instance.seed = *seed;
    }
    const mecsched::Instance inst = mecsched::realize_instance(cfg);
    const mecsched::Schedule sigma = read_sigma_file(sigma_path, inst);
    const mecsched::P3Problem prob = mecsched::build_p3(sigma, inst, cfg.eta);
    const mecsched::P3Solution sol = mecsched::solve_p3(prob);
    const mecsched::PowerAllocation p = mecsched::powers_from_solution(prob, sol);
    const mecsched::ObjectiveValue val = mecsched::objective(sigma, p, cfg.eta, inst);
    ordered_json out;
    out["tool"] = std::string(mecsched::kVersionString);
    out["eta"] = cfg.eta;
    out["powers_w"] = p.powers_w;
    out["objective_s"] = val.weighted_s;
    out["delay_s"] = val.delay_s;
    out["energy_j"] = val.energy_j;
    out["iterations"] = sol.iterations;
    out["converged"] = sol.converged;
    out["kkt_residual"] = sol.kkt_residual;
    emit(out);
    return 0;
}

int run_solve(const RunConfig& cfg) {
    const mecsched::Instance inst = mecsched::realize_instance(cfg);
    const mecsched::SolveReport report = mecsched::alternate(inst, cfg.eta);
    const mecsched::ObjectiveValue& final_val = report.objective_trace.back();
    ordered_json out;
    out["tool"] = std::string(mecsched::kVersionString);
    out["eta"] = cfg.eta;
    out["order"] = to_one_based(report.final_sigma.order());
    out["powers_w"] = report.final_p.powers_w;
    out["delay_s"] = final_val.delay_s;
    out["energy_j"] = final_val.energy_j;
    out["weighted_s"] = final_val.weighted_s;
    out["iterations"] = report.iterations_used;
    out["converged"] = report.converged;
    ordered_json trace = ordered_json::array();
    for (const auto& v : report.objective_trace) {
        trace.push_back(v.weighted_s);
    }
    out["trace_weighted_s"] = trace;
    emit(out);
    return 0;
}

int run_oracle(const RunConfig& cfg, const std::string& mode, int grid) {
    const mecsched::Instance inst = mecsched::realize_instance(cfg);
    mecsched::OracleResult res;
    if (mode == "schedule") {
        res = mecsched::brute_force_schedule(
            inst, mecsched::PowerAllocation::uniform(inst.n(), inst.channel.p_max_w()));
    } else if (mode == "power") {
        res = mecsched::grid_power_search(mecsched::Schedule::identity(inst.n()), inst,
                                          cfg.eta, grid);
    } else if (mode == "joint") {
        res = mecsched::joint_brute_force(inst, cfg.eta, grid);
    } else {
        throw mecsched::ConfigError("unknown oracle mode '" + mode + "'");
    }
    ordered_json out;
    out["tool"] = std::string(mecsched::kVersionString);
    out["mode"] = mode;
    out["best_value_s"] = res.best_value;
    out["best_order"] = to_one_based(res.best_sigma.order());
    out["best_powers_w"] = res.best_p.powers_w;
    out["evaluations"] = res.evaluations;
    emit(out);
    return 0;
}

int run_experiment(const RunConfig& cfg, const std::string& which,
                   std::optional<int> replicates, const std::string& out_dir) {
    mecsched::ExperimentResult result;
    if (which == "fig2") {
        mecsched::Fig2Params params;
        if (replicates) {
            params.replicates = *replicates;
        }
        result = mecsched::run_fig2(cfg, params);
    } else if (which == "fig3") {
        mecsched::Fig3Params params;
        if (replicates) {
            params.replicates = *replicates;
        }
        result = mecsched::run_fig3(cfg, params);
    } else if (which == "fig4") {
        mecsched::Fig4Params params;
        if (replicates) {
            params.replicates = *replicates;
        }
        result = mecsched::run_fig4(cfg, params);
    } else {
        throw mecsched::ConfigError("unknown experiment '" + which + "'");
    }
    mecsched::write_experiment(result, out_dir);
    std::printf("wrote %s/%s.csv and %s/%s.meta.json\n", out_dir.c_str(),
                result.name.c_str(), out_dir.c_str(), result.name.c_str());
    return 0;
}

void print_error(const char* type, const std::string& message) {
    ordered_json err;
    err["error"]["type"] = type;
    err["error"]["message"] = message;
    std::fprintf(stderr, "%s\n", err.dump().c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint offloading-order and transmit-power optimizer for a "
                 "single-user edge-computing link"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> eta;
    std::optional<int> n_override;
    app.add_option("--config", config_path, "JSON config file (defaults when omitted)");
    app.add_option("--seed", seed, "Override the master seed");
    app.add_option("--eta", eta, "Override the energy weight (s/J)");

    auto* solve_cmd = app.add_subcommand("solve", "Alternating minimization on one instance");

    auto* schedule_cmd =
        app.add_subcommand("schedule", "Optimal offloading order for fixed powers");
    std::string instance_path;
    std::string power_path;
    std::string sigma_path;
    schedule_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
    schedule_cmd->add_option("--power", power_path, "Power JSON {\"powers_w\": [...]}")
        ->required();

    auto* power_cmd = app.add_subcommand("power", "Optimal powers for a fixed order");
    power_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
    power_cmd->add_option("--sigma", sigma_path, "Order JSON {\"order\": [1-based]}")
        ->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference search");
    std::string oracle_mode = "schedule";
    int grid = 200;
    oracle_cmd->add_option("--mode", oracle_mode, "schedule | power | joint");
    oracle_cmd->add_option("--grid", grid, "Grid points per dimension");
    oracle_cmd->add_option("--n", n_override, "Override the task count");

    auto* exp_cmd = app.add_subcommand("experiment", "Reproduce an experiment sweep");
    std::string which;
    std::optional<int> replicates;
    std::string out_dir = ".";
    exp_cmd->add_option("name", which, "fig2 | fig3 | fig4")->required();
    exp_cmd->add_option("--replicates", replicates, "Replicates per sweep point");
    exp_cmd->add_option("--out", out_dir, "Output directory");

    auto* validate_cmd = app.add_subcommand("validate", "Run the invariant self-checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (schedule_cmd->parsed()) {
            return run_schedule(instance_path, power_path, seed);
        }
        if (power_cmd->parsed()) {
            return run_power(instance_path, sigma_path, eta, seed);
        }
        const RunConfig cfg = load_config(config_path, seed, eta, n_override);
        if (solve_cmd->parsed()) {
            return run_solve(cfg);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle(cfg, oracle_mode, grid);
        }
        if (exp_cmd->parsed()) {
            return run_experiment(cfg, which, replicates, out_dir);
        }
        if (validate_cmd->parsed()) {
            const bool ok = mecsched::run_validation_suite(cfg.instance.seed, true);
            std::printf("%s\n", ok ? "all checks passed" : "CHECKS FAILED");
            return ok ? 0 : 1;
        }
    } catch (const mecsched::ConfigError& e) {
        print_error("config", e.what());
        return 2;
    } catch (const mecsched::CapExceededError& e) {
        print_error("cap_exceeded", e.what());
        return 3;
    } catch (const mecsched::InfeasiblePowerError& e) {
        print_error("infeasible_power", e.what());
        return 3;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
    return 1;
}
