#ifndef MECSCHED_INSTANCE_GEN_HPP
#define MECSCHED_INSTANCE_GEN_HPP

#include <cstdint>

#include "mecsched/task.hpp"

namespace mecsched {

/// Recipe for a random instance: task sizes d_i ~ Unif(0, 2*d_avg] and
/// workloads c_i ~ Unif(0, 2*c_avg], drawn from a named seeded generator.
struct InstanceSpec {
    int n_tasks;
    double d_avg_bits;
    double c_avg_cycles_per_bit;
    std::uint64_t seed;
    ChannelConfig channel;
    ServerConfig server;

    void validate() const;
};

/// Deterministic: same spec, same instance, on every platform. Draw order is
/// d_1, c_1, d_2, c_2, ...; exact-zero draws are redrawn.
Instance generate_instance(const InstanceSpec& spec);

}  // namespace mecsched

#endif
