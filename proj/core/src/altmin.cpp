#include "mecsched/altmin.hpp"

#include <stdexcept>
#include <utility>

#include "mecsched/flowshop.hpp"
#include "mecsched/power_solver.hpp"

namespace mecsched {

void AltMinConfig::validate() const {
    if (iter_max < 1) {
        throw std::invalid_argument("AltMinConfig: iter_max must be >= 1");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("AltMinConfig: epsilon must be positive");
    }
    if (!(p3_tol > 0.0)) {
        throw std::invalid_argument("AltMinConfig: p3_tol must be positive");
    }
}

SolveReport alternate_from(const Instance& inst, double eta, const AltMinConfig& cfg,
                           const Schedule& sigma0, const PowerAllocation& p0) {
    cfg.validate();
    if (eta < 0.0) {
        throw std::domain_error("alternate: eta must be nonnegative");
    }

    Schedule sigma = sigma0;
    PowerAllocation p = p0;
    ObjectiveValue val = objective(sigma, p, eta, inst);

    SolveReport report{sigma, p, {val}, 0, false};
    double best = val.weighted_s;
    bool inner_ok = true;

    // the loop body always runs at least once
    for (int iteration = 1; iteration <= cfg.iter_max; ++iteration) {
        const double val_old = val.weighted_s;

        // order update: optimal for the current powers
        sigma = johnson_schedule(inst, p);

        // power update: optimal for the new order; adopt only if not worse
        const P3Problem prob = build_p3(sigma, inst, eta);
        const P3Solution sol = solve_p3(prob, cfg.p3_tol);
        inner_ok = inner_ok && sol.converged;
        const PowerAllocation p_candidate = powers_from_solution(prob, sol);
        const ObjectiveValue cand_val = objective(sigma, p_candidate, eta, inst);
        const ObjectiveValue keep_val = objective(sigma, p, eta, inst);
        if (cand_val.weighted_s <= keep_val.weighted_s) {
            p = p_candidate;
            val = cand_val;
        } else {
            val = keep_val;
        }

        report.objective_trace.push_back(val);
        report.iterations_used = iteration;
        if (val.weighted_s <= best) {
            best = val.weighted_s;
            report.final_sigma = sigma;
            report.final_p = p;
        }
        if (val_old - val.weighted_s < cfg.epsilon) {
            report.converged = inner_ok;
            return report;
        }
    }
    report.converged = false;  // stopped by the iteration cap
    return report;
}

SolveReport alternate(const Instance& inst, double eta, const AltMinConfig& cfg) {
    return alternate_from(inst, eta, cfg, Schedule::identity(inst.n()),
                          PowerAllocation::uniform(inst.n(), inst.channel.p_max_w()));
}

}  // namespace mecsched
