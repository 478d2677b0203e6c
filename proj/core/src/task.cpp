#include "mecsched/task.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mecsched {

TaskSpec::TaskSpec(double input_bits_, double workload_cycles_per_bit_)
    : input_bits(input_bits_), workload_cycles_per_bit(workload_cycles_per_bit_) {
    if (!(input_bits > 0.0) || !std::isfinite(input_bits)) {
        throw std::invalid_argument("TaskSpec: input_bits must be strictly positive");
    }
    if (!(workload_cycles_per_bit > 0.0) || !std::isfinite(workload_cycles_per_bit)) {
        throw std::invalid_argument("TaskSpec: workload_cycles_per_bit must be strictly positive");
    }
}

ServerConfig::ServerConfig(double cpu_hz_) : cpu_hz(cpu_hz_) {
    if (!(cpu_hz > 0.0) || !std::isfinite(cpu_hz)) {
        throw std::invalid_argument("ServerConfig: cpu_hz must be strictly positive");
    }
}

double exec_time_s(const TaskSpec& task, const ServerConfig& srv) {
    return task.input_bits * task.workload_cycles_per_bit / srv.cpu_hz;
}

namespace {
void fnv_mix(std::uint64_t& h, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int shift = 0; shift < 64; shift += 8) {
        h ^= (bits >> shift) & 0xffu;
        h *= 0x100000001b3ull;
    }
}
}  // namespace

std::uint64_t instance_fingerprint(const Instance& inst) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& t : inst.tasks) {
        fnv_mix(h, t.input_bits);
        fnv_mix(h, t.workload_cycles_per_bit);
    }
    fnv_mix(h, inst.channel.bandwidth_hz());
    fnv_mix(h, inst.channel.pathloss_const_linear());
    fnv_mix(h, inst.channel.pathloss_exponent());
    fnv_mix(h, inst.channel.reference_distance_m());
    fnv_mix(h, inst.channel.distance_m());
    fnv_mix(h, inst.channel.noise_psd_w_per_hz());
    fnv_mix(h, inst.channel.p_max_w());
    fnv_mix(h, inst.server.cpu_hz);
    return h;
}

}  // namespace mecsched
