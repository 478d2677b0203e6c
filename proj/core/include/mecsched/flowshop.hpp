#ifndef MECSCHED_FLOWSHOP_HPP
#define MECSCHED_FLOWSHOP_HPP

#include <vector>

#include "mecsched/schedule.hpp"
#include "mecsched/task.hpp"

namespace mecsched {

/// Two-stage split of the task set: set_f holds tasks whose transmission time
/// is strictly below their execution time, set_g the rest (ties go to set_g).
struct JohnsonPartition {
    std::vector<int> set_f;
    std::vector<int> set_g;
};

/// Partition on explicit per-task times.
JohnsonPartition johnson_partition(const std::vector<double>& tx_s,
                                   const std::vector<double>& exec_s);

JohnsonPartition johnson_partition(const Instance& inst, const PowerAllocation& p);

/// Makespan-optimal order for a two-machine pipeline: set_f ascending by
/// transmission time, then set_g descending by execution time. Equal keys
/// resolve by ascending task index, so the result is deterministic.
std::vector<int> johnson_order(const std::vector<double>& tx_s,
                               const std::vector<double>& exec_s);

Schedule johnson_schedule(const Instance& inst, const PowerAllocation& p);

}  // namespace mecsched

#endif
