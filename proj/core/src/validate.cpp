#include <cmath>
#include <cstdio>
#include <span>

#include "mecsched/altmin.hpp"
#include "mecsched/energy_kernel.hpp"
#include "mecsched/experiments.hpp"
#include "mecsched/flowshop.hpp"
#include "mecsched/oracle.hpp"
#include "mecsched/power_solver.hpp"
#include "mecsched/rng.hpp"
#include "mecsched/timeline.hpp"

namespace mecsched {

namespace {

struct CheckReporter {
    bool all_ok = true;
    bool verbose = true;

    void report(const char* name, bool ok) {
        all_ok = all_ok && ok;
        if (verbose) {
            std::printf("%-44s %s\n", name, ok ? "ok" : "FAIL");
        }
    }
};

Instance random_instance(const RunConfig& cfg, int n, std::uint64_t seed) {
    InstanceSpec spec = cfg.instance;
    spec.n_tasks = n;
    spec.seed = seed;
    return generate_instance(spec);
}

PowerAllocation random_powers(const ChannelConfig& ch, int n, Xoshiro256StarStar& rng) {
    PowerAllocation p{std::vector<double>(static_cast<std::size_t>(n))};
    for (auto& v : p.powers_w) {
        v = ch.p_max_w() * (1.0 - rng.uniform01());
    }
    return p;
}

}  // namespace

bool run_validation_suite(std::uint64_t seed, bool verbose) {
    CheckReporter rep;
    rep.verbose = verbose;
    const RunConfig cfg = default_run_config();
    const ChannelConfig& ch = cfg.instance.channel;
    Xoshiro256StarStar rng(derive_seed(seed, 0x76a11da7eull));

    // rate monotone and concave
    {
        bool ok = true;
        for (int t = 0; t < 100; ++t) {
            double p1 = ch.p_max_w() * (1.0 - rng.uniform01());
            double p2 = ch.p_max_w() * (1.0 - rng.uniform01());
            if (p1 > p2) {
                std::swap(p1, p2);
            }
            if (p1 == p2) {
                continue;
            }
            const double r1 = rate_bps(p1, ch);
            const double r2 = rate_bps(p2, ch);
            const double rm = rate_bps(0.5 * (p1 + p2), ch);
            ok = ok && r1 < r2 && rm >= 0.5 * (r1 + r2) - 1e-9 * r2;
        }
        rep.report("rate: strictly increasing, concave", ok);
    }

    // power <-> rate inverse round trip
    {
        bool ok = true;
        for (int t = 0; t < 100; ++t) {
            const double p = ch.p_max_w() * (1.0 - rng.uniform01());
            const double back = rate_inverse_to_power(1.0 / rate_bps(p, ch), ch);
            ok = ok && std::abs(back - p) <= 1e-9 * p;
        }
        rep.report("rate inverse: power round trip 1e-9", ok);
    }

    // kernel curvature vs central differences; step sized for conditioning
    {
        bool ok = true;
        const double d0 = min_rate_inverse(ch);
        for (int t = 0; t < 100; ++t) {
            const double xi = d0 * std::exp(std::log(1e4) * rng.uniform01());
            const auto der = energy_kernel_derivatives(xi, ch);
            const double h = (1.0 / (ch.bandwidth_hz() * xi) >= 0.5 ? 1e-4 : 1e-3) * xi;
            const double fd2 = (energy_kernel(xi + h, ch) - 2.0 * energy_kernel(xi, ch) +
                                energy_kernel(xi - h, ch)) /
                               (h * h);
            ok = ok && der.second > 0.0 && std::abs(der.second - fd2) <= 1e-5 * der.second;
        }
        rep.report("energy kernel: convex, derivatives match FD", ok);
    }

    // timeline recursion equals closed form
    {
        bool ok = true;
        for (int t = 0; t < 200; ++t) {
            const int n = 1 + static_cast<int>(rng.below(12));
            const Instance inst = random_instance(cfg, n, rng.next());
            const PowerAllocation p = random_powers(ch, n, rng);
            const Schedule s{rng.permutation(n)};
            const double rec = timeline(s, p, inst).makespan_s;
            const double cf = makespan_closed_form(s, p, inst);
            ok = ok && std::abs(rec - cf) <= 1e-12 * rec;
        }
        rep.report("makespan: recursion equals closed form", ok);
    }

    // johnson order is brute-force optimal
    {
        bool ok = true;
        for (int t = 0; t < 50; ++t) {
            const int n = 2 + static_cast<int>(rng.below(6));
            const Instance inst = random_instance(cfg, n, rng.next());
            const PowerAllocation p = random_powers(ch, n, rng);
            const double mk =
                timeline(johnson_schedule(inst, p), p, inst).makespan_s;
            const OracleResult ref = brute_force_schedule(inst, p);
            ok = ok && mk <= ref.best_value * (1.0 + 1e-12);
        }
        rep.report("johnson: matches exhaustive search", ok);
    }

    // energy is schedule-independent
    {
        bool ok = true;
        for (int t = 0; t < 50; ++t) {
            const int n = 2 + static_cast<int>(rng.below(10));
            const Instance inst = random_instance(cfg, n, rng.next());
            const PowerAllocation p = random_powers(ch, n, rng);
            ok = ok && transmit_energy_j(p, inst) == transmit_energy_j(p, inst);
        }
        rep.report("energy: permutation invariant", ok);
    }

    // power objective midpoint convexity
    {
        bool ok = true;
        for (int t = 0; t < 100; ++t) {
            const int n = 1 + static_cast<int>(rng.below(6));
            const Instance inst = random_instance(cfg, n, rng.next());
            const P3Problem prob = build_p3(Schedule::identity(n), inst, 10.0);
            std::vector<double> a(static_cast<std::size_t>(n));
            std::vector<double> b(static_cast<std::size_t>(n));
            std::vector<double> m(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                const auto k = static_cast<std::size_t>(j);
                a[k] = prob.xi_lower * std::exp(std::log(50.0) * rng.uniform01());
                b[k] = prob.xi_lower * std::exp(std::log(50.0) * rng.uniform01());
                m[k] = 0.5 * (a[k] + b[k]);
            }
            const double fa = objective_in_xi(prob, a);
            const double fb = objective_in_xi(prob, b);
            const double fm = objective_in_xi(prob, m);
            ok = ok && fm <= 0.5 * (fa + fb) + 1e-12 * (std::abs(fa) + std::abs(fb));
        }
        rep.report("power objective: midpoint convex", ok);
    }

    // alternating minimization descends
    {
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            const Instance inst = random_instance(cfg, 10, rng.next());
            const SolveReport report = alternate(inst, 10.0);
            for (std::size_t i = 1; i < report.objective_trace.size(); ++i) {
                ok = ok && report.objective_trace[i].weighted_s <=
                               report.objective_trace[i - 1].weighted_s + 1e-9;
            }
        }
        rep.report("alternating minimization: monotone descent", ok);
    }

    return rep.all_ok;
}

}  // namespace mecsched
