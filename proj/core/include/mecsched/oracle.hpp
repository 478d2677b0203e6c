#ifndef MECSCHED_ORACLE_HPP
#define MECSCHED_ORACLE_HPP

#include <cstdint>

#include "mecsched/schedule.hpp"
#include "mecsched/task.hpp"

namespace mecsched {

/// Result of an exhaustive reference search. Deliberately dumb: every
/// candidate is enumerated and evaluated through the timeline recursion.
struct OracleResult {
    double best_value = 0.0;  // seconds (makespan or weighted objective)
    Schedule best_sigma{{}};
    PowerAllocation best_p{{}};
    std::uint64_t evaluations = 0;
};

inline constexpr int kBruteForceScheduleCap = 10;  // 10! = 3,628,800 orders
inline constexpr int kGridPowerCap = 3;
inline constexpr int kJointSolverCap = 6;

/// Minimum-makespan order over all N! permutations at fixed powers. Ties
/// resolve to the lexicographically smallest order. Throws CapExceededError
/// beyond N = 10.
OracleResult brute_force_schedule(const Instance& inst, const PowerAllocation& p);

/// Minimum weighted objective over a log-spaced rate-inverse grid
/// [D, 50 D]^N mapped back to powers (N <= 3, at least 100 points per
/// dimension).
OracleResult grid_power_search(const Schedule& sigma, const Instance& inst, double eta,
                               int grid_points_per_dim);

/// Minimum over all permutations with an inner power search: the grid for
/// N <= 3, the production power solver for N <= 6.
OracleResult joint_brute_force(const Instance& inst, double eta, int grid_points_per_dim);

}  // namespace mecsched

#endif
