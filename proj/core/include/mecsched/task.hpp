#ifndef MECSCHED_TASK_HPP
#define MECSCHED_TASK_HPP

#include <cstdint>
#include <vector>

#include "mecsched/channel.hpp"

namespace mecsched {

/// One computation task: input size in bits and workload in cycles per bit.
/// Zero-size tasks are rejected at construction; they make the flow-shop
/// ordering ratios degenerate.
struct TaskSpec {
    TaskSpec(double input_bits, double workload_cycles_per_bit);

    double input_bits;
    double workload_cycles_per_bit;
};

/// Edge-server CPU.
struct ServerConfig {
    explicit ServerConfig(double cpu_hz);

    double cpu_hz;
};

/// A solvable problem instance: the task list plus the physical context.
struct Instance {
    std::vector<TaskSpec> tasks;
    ChannelConfig channel;
    ServerConfig server;

    int n() const { return static_cast<int>(tasks.size()); }
};

/// Server-side execution time d*c/f_ser in seconds.
double exec_time_s(const TaskSpec& task, const ServerConfig& srv);

/// FNV-1a over the bit patterns of all instance parameters. Used to assert
/// that paired experiment arms really saw the same instance.
std::uint64_t instance_fingerprint(const Instance& inst);

}  // namespace mecsched

#endif
