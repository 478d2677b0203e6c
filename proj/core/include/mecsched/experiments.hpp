#ifndef MECSCHED_EXPERIMENTS_HPP
#define MECSCHED_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mecsched/config_io.hpp"

namespace mecsched {

/// One aggregated metric at one sweep point, with all replicate values kept so
/// the mean is recomputable from the output alone.
struct ExperimentRow {
    double x = 0.0;
    std::string metric;
    double mean = 0.0;
    int replicates = 0;
    std::vector<double> values;
};

struct ExperimentResult {
    std::string name;
    std::vector<ExperimentRow> rows;
    std::string meta_json;  // tool version, full config echo, seed, sweep values
};

/// Delay vs task count, optimal order against a fresh random order per
/// replicate, at fixed uplink rates (eta = 0). Empty rate list defaults to
/// {f_ser/c_avg, 2 f_ser/c_avg, f_ser/(2 c_avg)}.
struct Fig2Params {
    std::vector<int> n_values = {5, 10, 15, 20, 25, 30, 35};
    std::vector<double> rate_scenarios_bps;
    int replicates = 200;
};
ExperimentResult run_fig2(const RunConfig& cfg, const Fig2Params& params);

/// Weighted objective vs eta, alternating minimization against random order at
/// peak power. Empty eta list defaults to 25 log-spaced points on [1e-2, 1e4].
struct Fig3Params {
    std::vector<double> eta_values;
    int replicates = 100;
};
ExperimentResult run_fig3(const RunConfig& cfg, const Fig3Params& params);

/// Energy/delay tradeoff vs eta for several server speeds, plus the peak-power
/// baseline energy. Empty f_ser list defaults to {0.5, 1, 2} GHz.
struct Fig4Params {
    std::vector<double> eta_values;
    std::vector<double> f_ser_values;
    int replicates = 200;
};
ExperimentResult run_fig4(const RunConfig& cfg, const Fig4Params& params);

/// Default logarithmic eta sweep for fig3/fig4.
std::vector<double> default_eta_sweep();

/// CSV serialization with the fixed column order
/// x,metric,mean,replicates,values (values ';'-joined).
std::string experiment_to_csv(const ExperimentResult& result);

/// Writes <out_dir>/<name>.csv and <out_dir>/<name>.meta.json.
void write_experiment(const ExperimentResult& result, const std::string& out_dir);

/// Quick self-check of the library invariants; prints one line per check and
/// returns whether all passed.
bool run_validation_suite(std::uint64_t seed, bool verbose);

}  // namespace mecsched

#endif
