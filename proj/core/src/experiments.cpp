#include "mecsched/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mecsched/altmin.hpp"
#include "mecsched/flowshop.hpp"
#include "mecsched/rng.hpp"
#include "mecsched/timeline.hpp"
#include "mecsched/version.hpp"

namespace mecsched {

namespace {
using ordered_json = nlohmann::ordered_json;

// sub-stream tag for the baseline permutation draw
constexpr std::uint64_t kRandomArmTag = 0x7065726d;  // "perm"

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

ExperimentRow make_row(double x, std::string metric, std::vector<double> values) {
    ExperimentRow row;
    row.x = x;
    row.metric = std::move(metric);
    row.replicates = static_cast<int>(values.size());
    row.mean = mean_of(values);
    row.values = std::move(values);
    return row;
}

/// Two arms must see the same instance; regenerate and compare fingerprints.
Instance paired_instance(const InstanceSpec& spec) {
    Instance inst = generate_instance(spec);
    const Instance recheck = generate_instance(spec);
    if (instance_fingerprint(inst) != instance_fingerprint(recheck)) {
        throw std::logic_error("paired arms diverged: instance generation is not deterministic");
    }
    return inst;
}

ordered_json meta_common(const char* name, const RunConfig& cfg, std::uint64_t seed,
                         int replicates) {
    ordered_json meta;
    meta["tool"] = std::string(kVersionString);
    meta["experiment"] = name;
    meta["seed"] = seed;
    meta["replicates"] = replicates;
    meta["rng"] = "xoshiro256** seeded via splitmix64; "
                  "substream seeds derive_seed(master, index)";
    meta["config"] = ordered_json::parse(run_config_to_json(cfg));
    return meta;
}
}  // namespace

std::vector<double> default_eta_sweep() {
    std::vector<double> etas;
    etas.reserve(25);
    for (int k = 0; k < 25; ++k) {
        etas.push_back(std::pow(10.0, -2.0 + 6.0 * k / 24.0));
    }
    return etas;
}

ExperimentResult run_fig2(const RunConfig& cfg, const Fig2Params& params) {
    if (params.replicates < 1) {
        throw std::invalid_argument("run_fig2: replicates must be >= 1");
    }
    std::vector<double> rates = params.rate_scenarios_bps;
    if (rates.empty()) {
        const double f = cfg.instance.server.cpu_hz;
        const double c = cfg.instance.c_avg_cycles_per_bit;
        rates = {f / c, 2.0 * f / c, f / (2.0 * c)};
    }
    const std::uint64_t master = cfg.instance.seed;

    ExperimentResult out;
    out.name = "fig2";
    for (std::size_t si = 0; si < rates.size(); ++si) {
        const double p_for_rate = rate_inverse_to_power(1.0 / rates[si], cfg.instance.channel);
        for (std::size_t ni = 0; ni < params.n_values.size(); ++ni) {
            const int n = params.n_values[ni];
            std::vector<double> mk_johnson;
            std::vector<double> mk_random;
            mk_johnson.reserve(static_cast<std::size_t>(params.replicates));
            mk_random.reserve(static_cast<std::size_t>(params.replicates));
            const std::uint64_t point_seed = derive_seed(master, ni);
            for (int r = 0; r < params.replicates; ++r) {
                InstanceSpec spec = cfg.instance;
                spec.n_tasks = n;
                spec.seed = derive_seed(point_seed, static_cast<std::uint64_t>(r));
                const Instance inst = paired_instance(spec);
                const PowerAllocation p = PowerAllocation::uniform(n, p_for_rate);
                const Schedule opt = johnson_schedule(inst, p);
                mk_johnson.push_back(timeline(opt, p, inst).makespan_s);

                Xoshiro256StarStar perm_rng(derive_seed(spec.seed, kRandomArmTag));
                const Schedule rnd{perm_rng.permutation(n)};
                mk_random.push_back(timeline(rnd, p, inst).makespan_s);
            }
            const std::string tag = "@R=" + format_double(rates[si]);
            out.rows.push_back(make_row(n, "makespan_johnson" + tag, std::move(mk_johnson)));
            out.rows.push_back(make_row(n, "makespan_random" + tag, std::move(mk_random)));
        }
    }

    ordered_json meta = meta_common("fig2", cfg, master, params.replicates);
    meta["rate_scenarios_bps"] = rates;
    meta["n_values"] = params.n_values;
    meta["eta"] = 0.0;
    out.meta_json = meta.dump(2);
    return out;
}

ExperimentResult run_fig3(const RunConfig& cfg, const Fig3Params& params) {
    if (params.replicates < 1) {
        throw std::invalid_argument("run_fig3: replicates must be >= 1");
    }
    const std::vector<double> etas =
        params.eta_values.empty() ? default_eta_sweep() : params.eta_values;
    const std::uint64_t master = cfg.instance.seed;
    const double p_max = cfg.instance.channel.p_max_w();

    ExperimentResult out;
    out.name = "fig3";
    for (double eta : etas) {
        std::vector<double> proposed;
        std::vector<double> benchmark;
        proposed.reserve(static_cast<std::size_t>(params.replicates));
        benchmark.reserve(static_cast<std::size_t>(params.replicates));
        for (int r = 0; r < params.replicates; ++r) {
            InstanceSpec spec = cfg.instance;
            spec.seed = derive_seed(master, static_cast<std::uint64_t>(r));
            const Instance inst = paired_instance(spec);

            const SolveReport report = alternate(inst, eta);
            proposed.push_back(report.objective_trace.back().weighted_s);

            Xoshiro256StarStar perm_rng(derive_seed(spec.seed, kRandomArmTag));
            const Schedule rnd{perm_rng.permutation(inst.n())};
            const PowerAllocation full = PowerAllocation::uniform(inst.n(), p_max);
            benchmark.push_back(objective(rnd, full, eta, inst).weighted_s);
        }
        out.rows.push_back(make_row(eta, "objective_proposed", std::move(proposed)));
        out.rows.push_back(make_row(eta, "objective_benchmark", std::move(benchmark)));
    }

    ordered_json meta = meta_common("fig3", cfg, master, params.replicates);
    meta["eta_values"] = etas;
    out.meta_json = meta.dump(2);
    return out;
}

ExperimentResult run_fig4(const RunConfig& cfg, const Fig4Params& params) {
    if (params.replicates < 1) {
        throw std::invalid_argument("run_fig4: replicates must be >= 1");
    }
    const std::vector<double> etas =
        params.eta_values.empty() ? default_eta_sweep() : params.eta_values;
    const std::vector<double> fsers =
        params.f_ser_values.empty() ? std::vector<double>{5e8, 1e9, 2e9} : params.f_ser_values;
    const std::uint64_t master = cfg.instance.seed;
    const double p_max = cfg.instance.channel.p_max_w();

    ExperimentResult out;
    out.name = "fig4";
    for (double fser : fsers) {
        const std::string tag = "@fser=" + format_double(fser);
        for (double eta : etas) {
            std::vector<double> delays;
            std::vector<double> energies;
            std::vector<double> baseline;
            for (int r = 0; r < params.replicates; ++r) {
                InstanceSpec spec = cfg.instance;
                spec.server = ServerConfig(fser);
                spec.seed = derive_seed(master, static_cast<std::uint64_t>(r));
                const Instance inst = paired_instance(spec);

                const SolveReport report = alternate(inst, eta);
                const ObjectiveValue& final_val = report.objective_trace.back();
                delays.push_back(final_val.delay_s);
                energies.push_back(final_val.energy_j);

                const PowerAllocation full = PowerAllocation::uniform(inst.n(), p_max);
                baseline.push_back(transmit_energy_j(full, inst));
            }
            out.rows.push_back(make_row(eta, "delay_proposed" + tag, std::move(delays)));
            out.rows.push_back(make_row(eta, "energy_proposed" + tag, std::move(energies)));
            out.rows.push_back(make_row(eta, "energy_pmax_baseline" + tag, std::move(baseline)));
        }
    }

    ordered_json meta = meta_common("fig4", cfg, master, params.replicates);
    meta["eta_values"] = etas;
    meta["f_ser_values"] = fsers;
    out.meta_json = meta.dump(2);
    return out;
}

std::string experiment_to_csv(const ExperimentResult& result) {
    std::string csv = "x,metric,mean,replicates,values\n";
    for (const auto& row : result.rows) {
        std::string values;
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            if (i > 0) {
                values += ';';
            }
            values += format_double(row.values[i]);
        }
        csv += format_double(row.x);
        csv += ',';
        csv += csv_escape(row.metric);
        csv += ',';
        csv += format_double(row.mean);
        csv += ',';
        csv += std::to_string(row.replicates);
        csv += ',';
        csv += csv_escape(values);
        csv += '\n';
    }
    return csv;
}

void write_experiment(const ExperimentResult& result, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_text_file((dir / (result.name + ".csv")).string(), experiment_to_csv(result));
    write_text_file((dir / (result.name + ".meta.json")).string(), result.meta_json + "\n");
}

}  // namespace mecsched
