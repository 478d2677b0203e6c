#ifndef MECSCHED_ENERGY_KERNEL_HPP
#define MECSCHED_ENERGY_KERNEL_HPP

#include "mecsched/channel.hpp"

namespace mecsched {

/// Per-bit energy kernel xi*(2^(1/(omega*xi)) - 1).
///
/// Multiplied by the composite constant C and the task bits it gives the
/// weighted transmit energy after the rate-inverse change of variables.
/// Convex and strictly decreasing on xi > 0 with limit ln(2)/omega as
/// xi -> infinity. Throws std::domain_error for xi <= 0.
double energy_kernel(double xi_s_per_bit, const ChannelConfig& ch);

struct KernelDerivatives {
    double first;   // always <= 0
    double second;  // always >= 0
};

/// Closed-form first and second derivatives of the energy kernel.
KernelDerivatives energy_kernel_derivatives(double xi_s_per_bit, const ChannelConfig& ch);

/// Inverts the kernel slope: returns the unique xi > 0 with
/// -kernel'(xi) = x / weight_c, by bracket-doubling bisection.
///
/// For x == 0 the equation has no finite root and the +infinity sentinel is
/// returned (callers clip it to their box upper bound). Requires x >= 0 and
/// weight_c > 0.
double kernel_slope_inverse(double x, const ChannelConfig& ch, double weight_c);

}  // namespace mecsched

#endif
