#ifndef MECSCHED_POWER_SOLVER_HPP
#define MECSCHED_POWER_SOLVER_HPP

#include <span>
#include <vector>

#include "mecsched/channel.hpp"
#include "mecsched/schedule.hpp"
#include "mecsched/task.hpp"

namespace mecsched {

/// Power subproblem for a fixed offloading order, after the rate-inverse
/// change of variables and elimination of the auxiliary completion bounds:
///
///   minimize over xi in [xi_lower, xi_upper]^N
///     max_i [ sum_{j<=i} bits_j*xi_j + exec_suffix_i ]
///     + weight_c * sum_j bits_j * energy_kernel(xi_j)
///
/// All vectors are in schedule order. weight_c = eta * noise_power / gain.
struct P3Problem {
    Schedule sigma;
    double weight_c;
    double xi_lower;  // induced by the peak power
    double xi_upper;  // box cap, artifact addition
    std::vector<double> bits;
    std::vector<double> exec_s;
    std::vector<double> exec_suffix_s;
    ChannelConfig channel;

    int n() const { return static_cast<int>(bits.size()); }
};

P3Problem build_p3(const Schedule& sigma, const Instance& inst, double eta);

/// Convex objective above. Throws std::domain_error when xi leaves the box by
/// more than 1e-9 relative.
double objective_in_xi(const P3Problem& prob, std::span<const double> xi);

struct P3Solution {
    std::vector<double> xi_star;       // schedule order
    std::vector<double> t_tilde_star;  // completion bounds rebuilt by forward recursion
    double objective_value = 0.0;
    int iterations = 0;
    bool converged = false;
    double kkt_residual = 0.0;  // certified relative duality gap, dimensionless
    int box_expansions = 0;     // times the xi upper bound was grown (max 2)
    double xi_upper_used = 0.0;
    // best true objective after each continuation stage and after the polish
    std::vector<double> stage_best_objectives;
};

/// Smoothed-minimax solve: log-sum-exp temperature continuation with
/// diagonally scaled projected gradient steps (BB trial step, nonmonotone
/// Armijo backtracking), then a projected subgradient polish restricted to the
/// monotone cone the optimum is known to lie in. Never throws on
/// non-convergence; inspect `converged`.
P3Solution solve_p3(const P3Problem& prob, double tol = 1e-7);

/// Scatter a schedule-ordered solution back to task-index powers.
PowerAllocation powers_from_solution(const P3Problem& prob, const P3Solution& sol);

struct MonotonicityCheck {
    bool non_increasing = false;
    double max_violation_w = 0.0;  // worst adjacent power increase along the order
};

/// Optimal powers are non-increasing along the schedule; verifies the solved
/// allocation up to 1e-6 * p_max.
MonotonicityCheck check_monotonicity(const P3Solution& sol, const P3Problem& prob);

/// Multipliers of the completion-bound constraints (alpha, one per position)
/// and of the chaining constraints (beta, positions 2..N).
struct DualState {
    std::vector<double> alpha;
    std::vector<double> beta;

    void validate() const;  // componentwise nonnegative
};

/// Soft-max multiplier estimates at temperature mu around a primal point.
/// Test-side aid for the closed-form dual reconstruction; beta is not
/// estimated and is returned as zeros.
DualState estimate_multipliers(const P3Problem& prob, std::span<const double> xi, double mu);

}  // namespace mecsched

#endif
