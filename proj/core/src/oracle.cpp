#include "mecsched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mecsched/errors.hpp"
#include "mecsched/power_solver.hpp"
#include "mecsched/timeline.hpp"

namespace mecsched {

OracleResult brute_force_schedule(const Instance& inst, const PowerAllocation& p) {
    const int n = inst.n();
    if (n > kBruteForceScheduleCap) {
        throw CapExceededError("brute_force_schedule: N = " + std::to_string(n) +
                               " exceeds the cap of " + std::to_string(kBruteForceScheduleCap));
    }
    if (p.size() != n) {
        throw std::invalid_argument("brute_force_schedule: power/instance dimensions disagree");
    }
    const std::vector<double> tx = tx_times_s(p, inst);
    const std::vector<double> ex = exec_times_s(inst);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    OracleResult out;
    out.best_value = std::numeric_limits<double>::infinity();
    out.best_p = p;
    std::vector<int> best_order = order;
    do {
        ++out.evaluations;
        const double mk = makespan_of_order(tx, ex, order);
        // strict improvement keeps the lexicographically smallest tie
        if (mk < out.best_value) {
            out.best_value = mk;
            best_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    out.best_sigma = Schedule(std::move(best_order));
    return out;
}

namespace {

/// Log-spaced rate inverses over [D, 50 D].
std::vector<double> grid_points(const ChannelConfig& ch, int points) {
    const double lo = min_rate_inverse(ch);
    const double hi = 50.0 * lo;
    std::vector<double> xi(static_cast<std::size_t>(points));
    const double step = std::log(hi / lo) / (points - 1);
    for (int k = 0; k < points; ++k) {
        xi[static_cast<std::size_t>(k)] = lo * std::exp(step * k);
    }
    xi.front() = lo;
    xi.back() = hi;
    return xi;
}

struct GridSearchResult {
    double best_value;
    std::vector<int> best_cell;
    std::vector<double> best_powers;  // schedule order
    std::uint64_t evaluations;
};

/// Enumerates the full grid. Per-position transmission times and energies are
/// tabulated once through the physical-layer path (rate inversion + d/rate),
/// then every tuple is evaluated with the pipeline recursion.
GridSearchResult grid_search(const Schedule& sigma, const Instance& inst, double eta,
                             int points) {
    const int n = inst.n();
    const std::vector<double> xi_grid = grid_points(inst.channel, points);
    std::vector<double> power_tab(xi_grid.size());
    for (std::size_t k = 0; k < xi_grid.size(); ++k) {
        power_tab[k] = rate_inverse_to_power(xi_grid[k], inst.channel);
    }
    // tx_tab[j][k], energy_tab[j][k]: position j transmitting at grid power k
    std::vector<std::vector<double>> tx_tab(static_cast<std::size_t>(n));
    std::vector<std::vector<double>> energy_tab(static_cast<std::size_t>(n));
    std::vector<double> ex(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& task = inst.tasks[static_cast<std::size_t>(sigma[j])];
        ex[static_cast<std::size_t>(j)] = exec_time_s(task, inst.server);
        auto& tx_row = tx_tab[static_cast<std::size_t>(j)];
        auto& en_row = energy_tab[static_cast<std::size_t>(j)];
        tx_row.resize(xi_grid.size());
        en_row.resize(xi_grid.size());
        for (std::size_t k = 0; k < xi_grid.size(); ++k) {
            tx_row[k] = tx_time_s(task, power_tab[k], inst.channel);
            en_row[k] = power_tab[k] * tx_row[k];
        }
    }

    GridSearchResult res;
    res.best_value = std::numeric_limits<double>::infinity();
    res.best_cell.assign(static_cast<std::size_t>(n), 0);
    res.evaluations = 0;

    std::vector<int> cell(static_cast<std::size_t>(n), 0);
    for (;;) {
        double ready = 0.0;
        double comp = 0.0;
        double energy = 0.0;
        for (int j = 0; j < n; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const auto k = static_cast<std::size_t>(cell[jj]);
            ready += tx_tab[jj][k];
            comp = std::max(ready, comp) + ex[jj];
            energy += energy_tab[jj][k];
        }
        const double value = comp + eta * energy;
        ++res.evaluations;
        if (value < res.best_value) {
            res.best_value = value;
            res.best_cell = cell;
        }
        // odometer increment, last dimension fastest
        int dim = n - 1;
        while (dim >= 0) {
            auto& c = cell[static_cast<std::size_t>(dim)];
            if (++c < points) {
                break;
            }
            c = 0;
            --dim;
        }
        if (dim < 0) {
            break;
        }
    }

    res.best_powers.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        res.best_powers[static_cast<std::size_t>(j)] =
            power_tab[static_cast<std::size_t>(res.best_cell[static_cast<std::size_t>(j)])];
    }
    return res;
}

PowerAllocation scatter_to_tasks(const Schedule& sigma, const std::vector<double>& by_position) {
    PowerAllocation p{std::vector<double>(by_position.size(), 0.0)};
    for (int j = 0; j < sigma.size(); ++j) {
        p.powers_w[static_cast<std::size_t>(sigma[j])] =
            by_position[static_cast<std::size_t>(j)];
    }
    return p;
}

}  // namespace

OracleResult grid_power_search(const Schedule& sigma, const Instance& inst, double eta,
                               int grid_points_per_dim) {
    const int n = inst.n();
    if (n > kGridPowerCap) {
        throw CapExceededError("grid_power_search: N = " + std::to_string(n) +
                               " exceeds the cap of " + std::to_string(kGridPowerCap));
    }
    if (grid_points_per_dim < 100) {
        throw std::invalid_argument("grid_power_search: need at least 100 points per dimension");
    }
    if (sigma.size() != n) {
        throw std::invalid_argument("grid_power_search: schedule/instance dimensions disagree");
    }
    const GridSearchResult res = grid_search(sigma, inst, eta, grid_points_per_dim);
    OracleResult out;
    out.best_value = res.best_value;
    out.best_sigma = sigma;
    out.best_p = scatter_to_tasks(sigma, res.best_powers);
    out.evaluations = res.evaluations;
    return out;
}

OracleResult joint_brute_force(const Instance& inst, double eta, int grid_points_per_dim) {
    const int n = inst.n();
    if (n > kJointSolverCap) {
        throw CapExceededError("joint_brute_force: N = " + std::to_string(n) +
                               " exceeds the cap of " + std::to_string(kJointSolverCap));
    }
    const bool use_grid = n <= kGridPowerCap;
    if (use_grid && grid_points_per_dim < 100) {
        throw std::invalid_argument("joint_brute_force: need at least 100 points per dimension");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    OracleResult out;
    out.best_value = std::numeric_limits<double>::infinity();
    out.best_sigma = Schedule::identity(n);
    out.best_p = PowerAllocation::uniform(n, inst.channel.p_max_w());
    do {
        const Schedule sigma{std::vector<int>(order)};
        double value;
        PowerAllocation p{{}};
        std::uint64_t evals;
        if (use_grid) {
            const GridSearchResult res = grid_search(sigma, inst, eta, grid_points_per_dim);
            value = res.best_value;
            p = scatter_to_tasks(sigma, res.best_powers);
            evals = res.evaluations;
        } else {
            const P3Problem prob = build_p3(sigma, inst, eta);
            const P3Solution sol = solve_p3(prob);
            p = powers_from_solution(prob, sol);
            value = objective(sigma, p, eta, inst).weighted_s;
            evals = static_cast<std::uint64_t>(sol.iterations);
        }
        out.evaluations += evals;
        if (value < out.best_value) {
            out.best_value = value;
            out.best_sigma = sigma;
            out.best_p = p;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace mecsched
