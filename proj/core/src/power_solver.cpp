#include "mecsched/power_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mecsched/energy_kernel.hpp"

namespace mecsched {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

double kernel(double xi, double omega) {
    return xi * std::expm1(kLn2 / (omega * xi));
}

double kernel_d1(double xi, double omega) {
    const double x = 1.0 / (omega * xi);
    return std::exp2(x) * (1.0 - kLn2 * x) - 1.0;
}

double kernel_d2(double xi, double omega) {
    const double x = 1.0 / (omega * xi);
    const double lx = kLn2 * x;
    return std::exp2(x) * lx * lx / xi;
}

/// L2 projection onto the nondecreasing cone (pool adjacent violators).
void project_nondecreasing(std::vector<double>& x) {
    const std::size_t n = x.size();
    static thread_local std::vector<double> vals;
    static thread_local std::vector<int> counts;
    vals.clear();
    counts.clear();
    for (std::size_t i = 0; i < n; ++i) {
        vals.push_back(x[i]);
        counts.push_back(1);
        while (vals.size() > 1 && vals[vals.size() - 2] > vals.back()) {
            const double v2 = vals.back();
            const int c2 = counts.back();
            vals.pop_back();
            counts.pop_back();
            const double v1 = vals.back();
            const int c1 = counts.back();
            vals.back() = (v1 * c1 + v2 * c2) / (c1 + c2);
            counts.back() = c1 + c2;
        }
    }
    std::size_t i = 0;
    for (std::size_t b = 0; b < vals.size(); ++b) {
        for (int k = 0; k < counts[b]; ++k) {
            x[i++] = vals[b];
        }
    }
}

struct SolveWorkspace {
    std::vector<double> active;   // prefix tx + exec suffix per position
    std::vector<double> weights;  // softmax over active terms
    std::vector<double> wsuffix;  // suffix sums of weights
    std::vector<double> grad;
    std::vector<double> precond;
    std::vector<double> xi_prev;
    std::vector<double> grad_prev;
    std::vector<double> trial;
    std::vector<double> fhist;
};

class SmoothedProblem {
public:
    SmoothedProblem(const P3Problem& prob, double xi_upper)
        : bits_(prob.bits),
          suffix_(prob.exec_suffix_s),
          c_(prob.weight_c),
          omega_(prob.channel.bandwidth_hz()),
          lo_(prob.xi_lower),
          hi_(xi_upper),
          n_(prob.n()) {}

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    int n() const { return n_; }

    void active_terms(const std::vector<double>& xi, std::vector<double>& out) const {
        out.resize(static_cast<std::size_t>(n_));
        double prefix = 0.0;
        for (int j = 0; j < n_; ++j) {
            const auto k = static_cast<std::size_t>(j);
            prefix += bits_[k] * xi[k];
            out[k] = prefix + suffix_[k];
        }
    }

    double value(const std::vector<double>& xi, std::vector<double>& scratch) const {
        active_terms(xi, scratch);
        double m = *std::max_element(scratch.begin(), scratch.end());
        double energy = 0.0;
        for (int j = 0; j < n_; ++j) {
            const auto k = static_cast<std::size_t>(j);
            energy += bits_[k] * kernel(xi[k], omega_);
        }
        return m + c_ * energy;
    }

    double value_smoothed(const std::vector<double>& xi, double mu,
                          std::vector<double>& scratch) const {
        active_terms(xi, scratch);
        const double m = *std::max_element(scratch.begin(), scratch.end());
        double sum = 0.0;
        for (double a : scratch) {
            sum += std::exp((a - m) / mu);
        }
        double energy = 0.0;
        for (int j = 0; j < n_; ++j) {
            const auto k = static_cast<std::size_t>(j);
            energy += bits_[k] * kernel(xi[k], omega_);
        }
        return m + mu * std::log(sum) + c_ * energy;
    }

    /// Gradient of the smoothed objective; also fills the suffix softmax
    /// weights (the smoothed multiplier aggregates).
    void grad_smoothed(const std::vector<double>& xi, double mu, SolveWorkspace& ws) const {
        active_terms(xi, ws.active);
        const double m = *std::max_element(ws.active.begin(), ws.active.end());
        ws.weights.resize(static_cast<std::size_t>(n_));
        double sum = 0.0;
        for (int j = 0; j < n_; ++j) {
            const auto k = static_cast<std::size_t>(j);
            ws.weights[k] = std::exp((ws.active[k] - m) / mu);
            sum += ws.weights[k];
        }
        ws.wsuffix.resize(static_cast<std::size_t>(n_));
        double suffix = 0.0;
        for (int j = n_ - 1; j >= 0; --j) {
            const auto k = static_cast<std::size_t>(j);
            suffix += ws.weights[k] / sum;
            ws.wsuffix[k] = suffix;
        }
        ws.grad.resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            const auto k = static_cast<std::size_t>(j);
            ws.grad[k] = bits_[k] * (ws.wsuffix[k] + c_ * kernel_d1(xi[k], omega_));
        }
    }

    /// Diagonal of the smoothed Hessian, floored relatively so that flat
    /// coordinates do not stall the scaled step.
    void hess_diag(const std::vector<double>& xi, double mu, SolveWorkspace& ws) const {
        ws.precond.resize(static_cast<std::size_t>(n_));
        double pmax = 0.0;
        for (int j = 0; j < n_; ++j) {
            const auto k = static_cast<std::size_t>(j);
            const double w = ws.wsuffix[k];
            const double curv_max = bits_[k] * bits_[k] * std::max(w - w * w, 0.0) / mu;
            const double curv_energy = c_ * bits_[k] * kernel_d2(xi[k], omega_);
            ws.precond[k] = curv_max + curv_energy;
            pmax = std::max(pmax, ws.precond[k]);
        }
        const double floor = std::max(1e-12 * pmax, 1e-300);
        for (auto& v : ws.precond) {
            v = std::max(v, floor);
        }
    }

    /// Subgradient of the true objective: first position attaining the max.
    void subgrad(const std::vector<double>& xi, SolveWorkspace& ws) const {
        active_terms(xi, ws.active);
        const auto it = std::max_element(ws.active.begin(), ws.active.end());
        const int argmax = static_cast<int>(it - ws.active.begin());
        ws.grad.resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            const auto k = static_cast<std::size_t>(j);
            ws.grad[k] = c_ * bits_[k] * kernel_d1(xi[k], omega_) +
                         (j <= argmax ? bits_[k] : 0.0);
        }
    }

private:
    const std::vector<double>& bits_;
    const std::vector<double>& suffix_;
    double c_;
    double omega_;
    double lo_;
    double hi_;
    int n_;
};

/// One continuation stage: diagonally scaled projected gradient with a BB
/// trial step and nonmonotone Armijo backtracking. Returns iterations used and
/// whether the projected-gradient criterion was met before the cap.
struct StageResult {
    int iterations = 0;
    bool met_tolerance = false;
};

StageResult run_stage(const SmoothedProblem& sp, std::vector<double>& xi, double mu,
                      int max_iter, double gtol_abs, SolveWorkspace& ws) {
    const double lo = sp.lo();
    const double hi = sp.hi();
    const int n = sp.n();
    double f = sp.value_smoothed(xi, mu, ws.active);
    sp.grad_smoothed(xi, mu, ws);
    ws.fhist.assign(1, f);
    double step = 1.0;
    bool have_prev = false;
    StageResult res;
    while (res.iterations < max_iter) {
        ++res.iterations;
        sp.hess_diag(xi, mu, ws);
        if (have_prev) {
            double ss = 0.0;
            double sy = 0.0;
            for (int j = 0; j < n; ++j) {
                const auto k = static_cast<std::size_t>(j);
                const double s = xi[k] - ws.xi_prev[k];
                const double y = ws.grad[k] - ws.grad_prev[k];
                ss += s * s * ws.precond[k];
                sy += s * y;
            }
            step = sy > 0.0 ? ss / sy : std::min(step * 4.0, 1e12);
            step = std::clamp(step, 1e-12, 1e12);
        } else {
            step = 1.0;
        }
        double fmax = -std::numeric_limits<double>::infinity();
        const std::size_t hist_lo = ws.fhist.size() > 10 ? ws.fhist.size() - 10 : 0;
        for (std::size_t h = hist_lo; h < ws.fhist.size(); ++h) {
            fmax = std::max(fmax, ws.fhist[h]);
        }
        double tt = step;
        bool accepted = false;
        double ft = f;
        for (int bt = 0; bt < 80; ++bt) {
            ws.trial.resize(static_cast<std::size_t>(n));
            bool moved = false;
            double dec = 0.0;
            for (int j = 0; j < n; ++j) {
                const auto k = static_cast<std::size_t>(j);
                const double cand = std::clamp(xi[k] - tt * ws.grad[k] / ws.precond[k], lo, hi);
                ws.trial[k] = cand;
                moved = moved || cand != xi[k];
                dec += ws.grad[k] * (cand - xi[k]);
            }
            if (!moved) {
                break;
            }
            ft = sp.value_smoothed(ws.trial, mu, ws.active);
            if (ft <= fmax + 1e-4 * dec) {
                accepted = true;
                break;
            }
            tt *= 0.5;
        }
        if (!accepted) {
            res.met_tolerance = true;  // no admissible step left at this temperature
            break;
        }
        ws.xi_prev = xi;
        ws.grad_prev = ws.grad;
        have_prev = true;
        xi = ws.trial;
        f = ft;
        ws.fhist.push_back(f);
        sp.grad_smoothed(xi, mu, ws);
        double pg = 0.0;
        for (int j = 0; j < n; ++j) {
            const auto k = static_cast<std::size_t>(j);
            const double moved_to = std::clamp(xi[k] - ws.grad[k] / ws.precond[k], lo, hi);
            pg = std::max(pg, std::abs(xi[k] - moved_to));
        }
        if (pg <= gtol_abs) {
            res.met_tolerance = true;
            break;
        }
    }
    return res;
}

struct InnerSolve {
    std::vector<double> xi;
    double objective = 0.0;
    int iterations = 0;
    bool stages_converged = false;
    std::vector<double> stage_best;
};

/// argmin over [lo, hi] of y*xi + C*kernel(xi), by bisection on the slope.
double box_slope_argmin(double y, double c, double omega, double lo, double hi) {
    if (c == 0.0 || y >= -kernel_d1(lo, omega) * c) {
        return lo;
    }
    if (y <= -kernel_d1(hi, omega) * c) {
        return hi;
    }
    double a = lo;
    double b = hi;
    for (int i = 0; i < 200 && (b - a) > 1e-14 * b; ++i) {
        const double mid = 0.5 * (a + b);
        if (-kernel_d1(mid, omega) * c > y) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

/// Evaluates the concave dual at a feasible multiplier suffix chain
/// 1 = W_1 >= ... >= W_N >= 0; any such chain certifies a lower bound.
double dual_value(const P3Problem& prob, double xi_upper, const std::vector<double>& w) {
    const double omega = prob.channel.bandwidth_hz();
    const double c = prob.weight_c;
    double value = prob.exec_suffix_s[0];
    for (int j = 0; j < prob.n(); ++j) {
        const auto k = static_cast<std::size_t>(j);
        const double xm = box_slope_argmin(w[k], c, omega, prob.xi_lower, xi_upper);
        value += prob.bits[k] * (w[k] * xm + c * kernel(xm, omega));
        if (j > 0) {
            value -= prob.exec_s[k - 1] * w[k];
        }
    }
    return value;
}

/// Certified lower bound from two candidate chains: the stationarity fit and
/// the argmax indicator (exact for corner solutions).
double dual_lower_bound(const P3Problem& prob, double xi_upper,
                        const std::vector<double>& xi) {
    const int n = prob.n();
    const double omega = prob.channel.bandwidth_hz();
    const double c = prob.weight_c;

    std::vector<double> w(static_cast<std::size_t>(n), 1.0);
    for (int j = 1; j < n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        const double raw =
            c > 0.0 ? std::clamp(-kernel_d1(xi[k], omega) * c, 0.0, 1.0) : 0.0;
        const bool at_lower = xi[k] <= prob.xi_lower * (1.0 + 1e-9);
        if (at_lower && prob.bits[k] * prob.xi_lower >= prob.exec_s[k - 1]) {
            w[k] = w[k - 1];  // the bound multiplier is free; carry the chain
        } else {
            w[k] = std::min(w[k - 1], raw);
        }
    }
    double bound = dual_value(prob, xi_upper, w);

    // argmax indicator chain
    double prefix = 0.0;
    double amax = -std::numeric_limits<double>::infinity();
    int argmax = 0;
    for (int j = 0; j < n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        prefix += prob.bits[k] * xi[k];
        if (prefix + prob.exec_suffix_s[k] > amax) {
            amax = prefix + prob.exec_suffix_s[k];
            argmax = j;
        }
    }
    std::vector<double> w2(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j <= argmax; ++j) {
        w2[static_cast<std::size_t>(j)] = 1.0;
    }
    bound = std::max(bound, dual_value(prob, xi_upper, w2));
    return bound;
}

InnerSolve solve_within_box(const P3Problem& prob, double xi_upper, double tol) {
    const SmoothedProblem sp(prob, xi_upper);
    const int n = prob.n();
    SolveWorkspace ws;
    std::vector<double> xi(static_cast<std::size_t>(n), prob.xi_lower);

    // initial makespan sets the temperature scale
    sp.active_terms(xi, ws.active);
    const double m0 = *std::max_element(ws.active.begin(), ws.active.end());
    const double gtol_abs = std::max(tol * 1e-2, 1e-12) * prob.xi_lower;

    InnerSolve out;
    // optimal powers are non-increasing along the order (rate inverses
    // non-decreasing), so candidates are tracked inside the monotone cone
    const auto cone_point = [&](std::vector<double> v) {
        project_nondecreasing(v);
        for (auto& x : v) {
            x = std::clamp(x, prob.xi_lower, xi_upper);
        }
        return v;
    };
    double fbest = sp.value(xi, ws.active);  // the start is already monotone
    std::vector<double> xibest = xi;
    bool all_stages_ok = true;
    constexpr double kMuLadder[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    for (double mu_rel : kMuLadder) {
        const StageResult sr = run_stage(sp, xi, mu_rel * m0, 3000, gtol_abs, ws);
        out.iterations += sr.iterations;
        all_stages_ok = all_stages_ok && (sr.met_tolerance || sr.iterations < 3000);
        std::vector<double> candidate = cone_point(xi);
        const double f = sp.value(candidate, ws.active);
        if (f < fbest) {
            fbest = f;
            xibest = std::move(candidate);
        }
        out.stage_best.push_back(fbest);
    }

    xi = xibest;
    const double r0 = 1e-5 * *std::max_element(xi.begin(), xi.end());
    constexpr int kPolishIterations = 600;
    for (int k = 1; k <= kPolishIterations; ++k) {
        sp.subgrad(xi, ws);
        double gnorm = 0.0;
        for (double g : ws.grad) {
            gnorm += g * g;
        }
        gnorm = std::sqrt(gnorm);
        if (gnorm == 0.0) {
            break;
        }
        const double step = r0 / (k * gnorm);
        for (int j = 0; j < n; ++j) {
            const auto i = static_cast<std::size_t>(j);
            xi[i] -= step * ws.grad[i];
        }
        project_nondecreasing(xi);
        for (auto& v : xi) {
            v = std::clamp(v, prob.xi_lower, xi_upper);
        }
        const double f = sp.value(xi, ws.active);
        if (f < fbest) {
            fbest = f;
            xibest = xi;
        }
        ++out.iterations;
    }
    out.stage_best.push_back(fbest);

    out.xi = std::move(xibest);
    out.objective = fbest;
    out.stages_converged = all_stages_ok;
    return out;
}

}  // namespace

P3Problem build_p3(const Schedule& sigma, const Instance& inst, double eta) {
    if (eta < 0.0) {
        throw std::domain_error("build_p3: eta must be nonnegative");
    }
    if (sigma.size() != inst.n()) {
        throw std::invalid_argument("build_p3: schedule/instance dimensions disagree");
    }
    const int n = inst.n();
    const double xi_lower = min_rate_inverse(inst.channel);
    P3Problem prob{sigma,
                   eta * inst.channel.noise_power_w() / inst.channel.composite_gain(),
                   xi_lower,
                   1e4 * xi_lower,
                   {},
                   {},
                   {},
                   inst.channel};
    prob.bits.resize(static_cast<std::size_t>(n));
    prob.exec_s.resize(static_cast<std::size_t>(n));
    prob.exec_suffix_s.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& task = inst.tasks[static_cast<std::size_t>(sigma[j])];
        prob.bits[static_cast<std::size_t>(j)] = task.input_bits;
        prob.exec_s[static_cast<std::size_t>(j)] = exec_time_s(task, inst.server);
    }
    double suffix = 0.0;
    for (int j = n - 1; j >= 0; --j) {
        suffix += prob.exec_s[static_cast<std::size_t>(j)];
        prob.exec_suffix_s[static_cast<std::size_t>(j)] = suffix;
    }
    return prob;
}

double objective_in_xi(const P3Problem& prob, std::span<const double> xi) {
    if (static_cast<int>(xi.size()) != prob.n()) {
        throw std::invalid_argument("objective_in_xi: dimension mismatch");
    }
    for (double v : xi) {
        if (!(v >= prob.xi_lower * (1.0 - 1e-9)) || !(v <= prob.xi_upper * (1.0 + 1e-9))) {
            throw std::domain_error("objective_in_xi: rate inverse outside the box");
        }
    }
    const double omega = prob.channel.bandwidth_hz();
    double prefix = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    double energy = 0.0;
    for (int j = 0; j < prob.n(); ++j) {
        const auto k = static_cast<std::size_t>(j);
        prefix += prob.bits[k] * xi[k];
        best = std::max(best, prefix + prob.exec_suffix_s[k]);
        energy += prob.bits[k] * kernel(xi[k], omega);
    }
    return best + prob.weight_c * energy;
}

P3Solution solve_p3(const P3Problem& prob, double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("solve_p3: tolerance must be positive");
    }
    P3Solution sol;
    if (prob.n() == 0) {
        sol.converged = true;
        return sol;
    }

    double xi_upper = prob.xi_upper;
    InnerSolve inner;
    for (int expansion = 0;; ++expansion) {
        inner = solve_within_box(prob, xi_upper, tol);
        sol.iterations += inner.iterations;
        const double hi_mark = 0.999 * xi_upper;
        const bool upper_active =
            std::any_of(inner.xi.begin(), inner.xi.end(),
                        [&](double v) { return v >= hi_mark; });
        if (!upper_active || expansion >= 2) {
            sol.box_expansions = expansion;
            break;
        }
        xi_upper *= 10.0;
    }
    sol.xi_upper_used = xi_upper;
    sol.xi_star = std::move(inner.xi);
    sol.objective_value = inner.objective;
    sol.stage_best_objectives = std::move(inner.stage_best);

    // completion bounds by the forward recursion; the last one is the makespan
    const int n = prob.n();
    sol.t_tilde_star.resize(static_cast<std::size_t>(n));
    double prefix = 0.0;
    double comp = 0.0;
    for (int j = 0; j < n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        prefix += prob.bits[k] * sol.xi_star[k];
        comp = std::max(comp, prefix) + prob.exec_s[k];
        sol.t_tilde_star[k] = comp;
    }

    // certified relative duality gap at the returned point
    const double lower = dual_lower_bound(prob, xi_upper, sol.xi_star);
    sol.kkt_residual =
        std::max(0.0, sol.objective_value - lower) / std::max(sol.objective_value, 1e-300);
    sol.converged = inner.stages_converged && sol.kkt_residual <= 1e-4;
    return sol;
}

PowerAllocation powers_from_solution(const P3Problem& prob, const P3Solution& sol) {
    PowerAllocation p{std::vector<double>(static_cast<std::size_t>(prob.n()), 0.0)};
    for (int j = 0; j < prob.n(); ++j) {
        p.powers_w[static_cast<std::size_t>(prob.sigma[j])] =
            rate_inverse_to_power(sol.xi_star[static_cast<std::size_t>(j)], prob.channel);
    }
    return p;
}

MonotonicityCheck check_monotonicity(const P3Solution& sol, const P3Problem& prob) {
    MonotonicityCheck out;
    double prev = std::numeric_limits<double>::infinity();
    out.max_violation_w = 0.0;
    for (double xi : sol.xi_star) {
        const double p = rate_inverse_to_power(xi, prob.channel);
        out.max_violation_w = std::max(out.max_violation_w, p - prev);
        prev = p;
    }
    out.max_violation_w = std::max(out.max_violation_w, 0.0);
    out.non_increasing = out.max_violation_w <= 1e-6 * prob.channel.p_max_w();
    return out;
}

void DualState::validate() const {
    for (double a : alpha) {
        if (!(a >= 0.0)) {
            throw std::invalid_argument("DualState: alpha must be nonnegative");
        }
    }
    for (double b : beta) {
        if (!(b >= 0.0)) {
            throw std::invalid_argument("DualState: beta must be nonnegative");
        }
    }
}

DualState estimate_multipliers(const P3Problem& prob, std::span<const double> xi, double mu) {
    if (static_cast<int>(xi.size()) != prob.n()) {
        throw std::invalid_argument("estimate_multipliers: dimension mismatch");
    }
    const int n = prob.n();
    std::vector<double> active(static_cast<std::size_t>(n));
    double prefix = 0.0;
    for (int j = 0; j < n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        prefix += prob.bits[k] * xi[k];
        active[k] = prefix + prob.exec_suffix_s[k];
    }
    const double m = *std::max_element(active.begin(), active.end());
    DualState dual;
    dual.alpha.resize(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const auto k = static_cast<std::size_t>(j);
        dual.alpha[k] = std::exp((active[k] - m) / mu);
        sum += dual.alpha[k];
    }
    for (auto& a : dual.alpha) {
        a /= sum;
    }
    dual.beta.assign(n > 1 ? static_cast<std::size_t>(n - 1) : 0, 0.0);
    return dual;
}

}  // namespace mecsched
