#ifndef MECSCHED_SCHEDULE_HPP
#define MECSCHED_SCHEDULE_HPP

#include <vector>

#include "mecsched/channel.hpp"

namespace mecsched {

/// An offloading order: a validated permutation of the task indices 0..N-1.
/// Position j holds the index of the j-th task to transmit (and, under FCFS,
/// the j-th task the server executes).
class Schedule {
public:
    explicit Schedule(std::vector<int> order);

    static Schedule identity(int n);

    const std::vector<int>& order() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }
    int operator[](int position) const { return order_[static_cast<std::size_t>(position)]; }

private:
    std::vector<int> order_;
};

/// Per-task transmit powers in W. The box constraint 0 <= p_i <= p_max is the
/// representable domain; p_i = 0 yields infinite transmission time downstream,
/// so finite timelines additionally need strict positivity.
struct PowerAllocation {
    std::vector<double> powers_w;

    int size() const { return static_cast<int>(powers_w.size()); }

    /// Throws std::invalid_argument when any entry leaves [0, p_max].
    void validate(const ChannelConfig& ch) const;

    static PowerAllocation uniform(int n, double p_w);
};

}  // namespace mecsched

#endif
