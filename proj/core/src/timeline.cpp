#include "mecsched/timeline.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mecsched {

namespace {
void require_sizes(const Schedule& sigma, const PowerAllocation& p, const Instance& inst) {
    if (sigma.size() != inst.n() || p.size() != inst.n()) {
        throw std::invalid_argument("schedule/power/instance dimensions disagree");
    }
}
}  // namespace

double tx_time_s(const TaskSpec& task, double p_w, const ChannelConfig& ch) {
    if (p_w <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return task.input_bits / rate_bps(p_w, ch);
}

std::vector<double> tx_times_s(const PowerAllocation& p, const Instance& inst) {
    std::vector<double> tx(static_cast<std::size_t>(inst.n()));
    for (int i = 0; i < inst.n(); ++i) {
        tx[static_cast<std::size_t>(i)] =
            tx_time_s(inst.tasks[static_cast<std::size_t>(i)],
                      p.powers_w[static_cast<std::size_t>(i)], inst.channel);
    }
    return tx;
}

std::vector<double> exec_times_s(const Instance& inst) {
    std::vector<double> ex(static_cast<std::size_t>(inst.n()));
    for (int i = 0; i < inst.n(); ++i) {
        ex[static_cast<std::size_t>(i)] =
            exec_time_s(inst.tasks[static_cast<std::size_t>(i)], inst.server);
    }
    return ex;
}

double makespan_of_order(const std::vector<double>& tx_s, const std::vector<double>& exec_s,
                         const std::vector<int>& order) {
    double ready = 0.0;
    double comp = 0.0;
    for (int idx : order) {
        const auto i = static_cast<std::size_t>(idx);
        ready += tx_s[i];
        comp = std::max(ready, comp) + exec_s[i];
    }
    return comp;
}

Timeline timeline(const Schedule& sigma, const PowerAllocation& p, const Instance& inst) {
    require_sizes(sigma, p, inst);
    const int n = inst.n();
    Timeline out;
    out.ready_s.resize(static_cast<std::size_t>(n));
    out.completion_s.resize(static_cast<std::size_t>(n));
    double ready = 0.0;
    double comp = 0.0;
    for (int j = 0; j < n; ++j) {
        const auto i = static_cast<std::size_t>(sigma[j]);
        ready += tx_time_s(inst.tasks[i], p.powers_w[i], inst.channel);
        comp = std::max(ready, comp) + exec_time_s(inst.tasks[i], inst.server);
        out.ready_s[static_cast<std::size_t>(j)] = ready;
        out.completion_s[static_cast<std::size_t>(j)] = comp;
    }
    out.makespan_s = n > 0 ? comp : 0.0;
    return out;
}

double makespan_closed_form(const Schedule& sigma, const PowerAllocation& p,
                            const Instance& inst) {
    require_sizes(sigma, p, inst);
    const int n = inst.n();
    // suffix sums of execution times in schedule order
    std::vector<double> exec_suffix(static_cast<std::size_t>(n) + 1, 0.0);
    for (int j = n - 1; j >= 0; --j) {
        const auto i = static_cast<std::size_t>(sigma[j]);
        exec_suffix[static_cast<std::size_t>(j)] =
            exec_suffix[static_cast<std::size_t>(j) + 1] +
            exec_time_s(inst.tasks[i], inst.server);
    }
    double prefix_tx = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const auto i = static_cast<std::size_t>(sigma[j]);
        prefix_tx += tx_time_s(inst.tasks[i], p.powers_w[i], inst.channel);
        best = std::max(best, prefix_tx + exec_suffix[static_cast<std::size_t>(j)]);
    }
    return n > 0 ? best : 0.0;
}

double transmit_energy_j(const PowerAllocation& p, const Instance& inst) {
    if (p.size() != inst.n()) {
        throw std::invalid_argument("power/instance dimensions disagree");
    }
    double total = 0.0;
    for (int i = 0; i < inst.n(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double pw = p.powers_w[k];
        // a task with zero power never transmits and draws no energy
        if (pw > 0.0) {
            total += pw * tx_time_s(inst.tasks[k], pw, inst.channel);
        }
    }
    return total;
}

ObjectiveValue objective(const Schedule& sigma, const PowerAllocation& p, double eta,
                         const Instance& inst) {
    if (eta < 0.0) {
        throw std::domain_error("objective: eta must be nonnegative");
    }
    ObjectiveValue v;
    v.delay_s = timeline(sigma, p, inst).makespan_s;
    v.energy_j = transmit_energy_j(p, inst);
    v.eta = eta;
    v.weighted_s = v.delay_s + eta * v.energy_j;
    return v;
}

}  // namespace mecsched
