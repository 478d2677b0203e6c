#include "mecsched/energy_kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mecsched {

namespace {
constexpr double kLn2 = 0.6931471805599453094;

void require_positive_xi(double xi) {
    if (!(xi > 0.0)) {
        throw std::domain_error("energy_kernel: rate inverse must be positive");
    }
}
}  // namespace

double energy_kernel(double xi_s_per_bit, const ChannelConfig& ch) {
    require_positive_xi(xi_s_per_bit);
    const double x = 1.0 / (ch.bandwidth_hz() * xi_s_per_bit);
    // expm1 keeps precision in the large-xi tail where 2^x - 1 ~ x*ln2
    return xi_s_per_bit * std::expm1(kLn2 * x);
}

KernelDerivatives energy_kernel_derivatives(double xi_s_per_bit, const ChannelConfig& ch) {
    require_positive_xi(xi_s_per_bit);
    const double x = 1.0 / (ch.bandwidth_hz() * xi_s_per_bit);
    const double e = std::exp2(x);
    KernelDerivatives out;
    out.first = e * (1.0 - kLn2 * x) - 1.0;
    out.second = e * (kLn2 * x) * (kLn2 * x) / xi_s_per_bit;
    return out;
}

double kernel_slope_inverse(double x, const ChannelConfig& ch, double weight_c) {
    if (x < 0.0 || !std::isfinite(x)) {
        throw std::domain_error("kernel_slope_inverse: slope aggregate must be nonnegative");
    }
    if (!(weight_c > 0.0)) {
        throw std::domain_error("kernel_slope_inverse: weight must be positive");
    }
    if (x == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double target = x / weight_c;  // -kernel' ranges over (0, inf), decreasing in xi
    const auto neg_slope = [&](double xi) {
        return -energy_kernel_derivatives(xi, ch).first;
    };

    const double seed = min_rate_inverse(ch);
    double lo = seed / 10.0;
    double hi = seed * 10.0;
    // -kernel' is decreasing: grow the bracket until it straddles the target
    while (lo > 1e-300 && neg_slope(lo) < target) lo *= 0.5;
    while (hi < 1e300 && neg_slope(hi) > target) hi *= 2.0;

    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 200 && (hi - lo) > 1e-13 * mid; ++i) {
        mid = 0.5 * (lo + hi);
        if (neg_slope(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace mecsched
