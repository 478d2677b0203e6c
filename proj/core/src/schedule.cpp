#include "mecsched/schedule.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mecsched {

Schedule::Schedule(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Schedule: order is not a permutation of 0..N-1");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Schedule Schedule::identity(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return Schedule(std::move(order));
}

void PowerAllocation::validate(const ChannelConfig& ch) const {
    for (double p : powers_w) {
        if (!(p >= 0.0) || !(p <= ch.p_max_w()) || !std::isfinite(p)) {
            throw std::invalid_argument("PowerAllocation: powers must lie in [0, p_max]");
        }
    }
}

PowerAllocation PowerAllocation::uniform(int n, double p_w) {
    return PowerAllocation{std::vector<double>(static_cast<std::size_t>(n), p_w)};
}

}  // namespace mecsched
