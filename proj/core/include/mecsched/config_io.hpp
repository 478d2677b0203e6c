#ifndef MECSCHED_CONFIG_IO_HPP
#define MECSCHED_CONFIG_IO_HPP

#include <string>
#include <vector>

#include "mecsched/instance_gen.hpp"
#include "mecsched/task.hpp"

namespace mecsched {

/// One run description: instance recipe plus the delay/energy weight. When the
/// explicit task arrays are non-empty they override seeded generation.
struct RunConfig {
    InstanceSpec instance;
    double eta = 0.0;
    std::vector<double> explicit_d_bits;
    std::vector<double> explicit_c_cycles_per_bit;
};

/// Reference defaults: N=20, d_avg=1 kbit, c_avg=797.5 cycles/bit, 1 MHz
/// bandwidth, -40 dB path-loss constant at 1 m, exponent 4, 100 m distance,
/// -174 dBm/Hz noise, 100 mW peak, 1 GHz server CPU, eta=0, seed=1.
RunConfig default_run_config();

/// Parses the JSON config schema (keys: n_tasks, d_avg_bits,
/// c_avg_cycles_per_bit, bandwidth_hz, g0_db, theta, l0_m, l_m,
/// n0_dbm_per_hz, p_max_w, f_ser_hz, eta, seed, optional d_bits /
/// c_cycles_per_bit arrays). Missing keys take the defaults above; unknown
/// keys are rejected. Throws ConfigError on any problem.
RunConfig parse_run_config(const std::string& json_text);

/// Stable-key-order JSON echo of a config (dB fields reconstructed).
std::string run_config_to_json(const RunConfig& cfg);

/// Materializes the instance: explicit arrays when present, otherwise the
/// seeded generator.
Instance realize_instance(const RunConfig& cfg);

/// Shortest round-trip decimal form of a double ("." separator, locale-free).
std::string format_double(double v);

/// Minimal RFC-4180 CSV: fields are quoted only when they contain a comma,
/// quote or newline; quotes are doubled.
std::string csv_escape(const std::string& field);

/// Splits RFC-4180 CSV text into rows of fields.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace mecsched

#endif
