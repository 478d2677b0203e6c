#ifndef MECSCHED_TIMELINE_HPP
#define MECSCHED_TIMELINE_HPP

#include <vector>

#include "mecsched/channel.hpp"
#include "mecsched/schedule.hpp"
#include "mecsched/task.hpp"

namespace mecsched {

/// Transmission time d/rate(p) in seconds. p <= 0 yields the infinite-duration
/// sentinel (+inf); callers must not let it leak into finite comparisons
/// silently.
double tx_time_s(const TaskSpec& task, double p_w, const ChannelConfig& ch);

/// Per-position input ready times and execution completion times.
struct Timeline {
    std::vector<double> ready_s;       // position j: sum of tx times through j
    std::vector<double> completion_s;  // position j: server finishes the j-th task
    double makespan_s = 0.0;           // completion_s back
};

/// Evaluates the two-stage pipeline recursion:
///   ready_j   = sum_{k<=j} tx(sigma_k)
///   comp_1    = ready_1 + exec(sigma_1)
///   comp_j    = max(ready_j, comp_{j-1}) + exec(sigma_j)
/// Throws std::invalid_argument on a size mismatch between sigma, p and the
/// instance.
Timeline timeline(const Schedule& sigma, const PowerAllocation& p, const Instance& inst);

/// Algebraic unrolling of the recursion:
///   makespan = max_i [ sum_{j<=i} tx_j + sum_{k>=i} exec_k ].
/// Agrees with timeline().makespan_s to floating-point roundoff.
double makespan_closed_form(const Schedule& sigma, const PowerAllocation& p,
                            const Instance& inst);

/// Total transmit energy sum_i p_i * d_i / rate(p_i), accumulated in ascending
/// task-index order (schedule-independent bit for bit).
double transmit_energy_j(const PowerAllocation& p, const Instance& inst);

/// Weighted objective components. weighted = delay + eta * energy.
struct ObjectiveValue {
    double delay_s = 0.0;
    double energy_j = 0.0;
    double eta = 0.0;
    double weighted_s = 0.0;
};

ObjectiveValue objective(const Schedule& sigma, const PowerAllocation& p, double eta,
                         const Instance& inst);

// Raw-times layer shared by the scheduler, the power solver and the oracles.

/// F2 pipeline makespan for explicit per-task transmission and execution times.
double makespan_of_order(const std::vector<double>& tx_s, const std::vector<double>& exec_s,
                         const std::vector<int>& order);

/// Per-task transmission times for an allocation, +inf where p_i = 0.
std::vector<double> tx_times_s(const PowerAllocation& p, const Instance& inst);

/// Per-task server execution times.
std::vector<double> exec_times_s(const Instance& inst);

}  // namespace mecsched

#endif
