#include "mecsched/flowshop.hpp"

#include <algorithm>
#include <stdexcept>

#include "mecsched/timeline.hpp"

namespace mecsched {

JohnsonPartition johnson_partition(const std::vector<double>& tx_s,
                                   const std::vector<double>& exec_s) {
    if (tx_s.size() != exec_s.size()) {
        throw std::invalid_argument("johnson_partition: time vectors disagree in size");
    }
    JohnsonPartition part;
    for (int i = 0; i < static_cast<int>(tx_s.size()); ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (tx_s[k] < exec_s[k]) {
            part.set_f.push_back(i);
        } else {
            part.set_g.push_back(i);
        }
    }
    return part;
}

JohnsonPartition johnson_partition(const Instance& inst, const PowerAllocation& p) {
    return johnson_partition(tx_times_s(p, inst), exec_times_s(inst));
}

std::vector<int> johnson_order(const std::vector<double>& tx_s,
                               const std::vector<double>& exec_s) {
    JohnsonPartition part = johnson_partition(tx_s, exec_s);
    std::stable_sort(part.set_f.begin(), part.set_f.end(), [&](int a, int b) {
        const double ta = tx_s[static_cast<std::size_t>(a)];
        const double tb = tx_s[static_cast<std::size_t>(b)];
        return ta < tb || (ta == tb && a < b);
    });
    std::stable_sort(part.set_g.begin(), part.set_g.end(), [&](int a, int b) {
        const double ea = exec_s[static_cast<std::size_t>(a)];
        const double eb = exec_s[static_cast<std::size_t>(b)];
        return ea > eb || (ea == eb && a < b);
    });
    std::vector<int> order = std::move(part.set_f);
    order.insert(order.end(), part.set_g.begin(), part.set_g.end());
    return order;
}

Schedule johnson_schedule(const Instance& inst, const PowerAllocation& p) {
    return Schedule(johnson_order(tx_times_s(p, inst), exec_times_s(inst)));
}

}  // namespace mecsched
