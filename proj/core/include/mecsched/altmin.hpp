#ifndef MECSCHED_ALTMIN_HPP
#define MECSCHED_ALTMIN_HPP

#include <vector>

#include "mecsched/schedule.hpp"
#include "mecsched/task.hpp"
#include "mecsched/timeline.hpp"

namespace mecsched {

struct AltMinConfig {
    int iter_max = 50;      // outer iteration cap
    double epsilon = 1e-7;  // absolute objective improvement threshold, seconds
    double p3_tol = 1e-7;   // inner power-solver tolerance

    void validate() const;
};

struct SolveReport {
    Schedule final_sigma;
    PowerAllocation final_p;
    std::vector<ObjectiveValue> objective_trace;  // start point, then one per outer iteration
    int iterations_used = 0;
    bool converged = false;  // improvement fell below epsilon and all inner solves converged
};

/// Alternating minimization: from full power and the identity order, repeat
/// (optimal order given powers, optimal powers given order) until the weighted
/// objective stops improving by at least epsilon or iter_max is hit. A power
/// update is only adopted when it does not worsen the objective, so the trace
/// is non-increasing even under inner-solver noise.
SolveReport alternate(const Instance& inst, double eta, const AltMinConfig& cfg = {});

/// Same loop from an explicit start point (fixed-point and restart studies).
SolveReport alternate_from(const Instance& inst, double eta, const AltMinConfig& cfg,
                           const Schedule& sigma0, const PowerAllocation& p0);

}  // namespace mecsched

#endif
