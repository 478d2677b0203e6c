#include "mecsched/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mecsched/errors.hpp"

namespace mecsched {

namespace {
constexpr double kLn2 = 0.6931471805599453094;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("ChannelConfig: ") + name +
                                    " must be strictly positive and finite");
    }
}
}  // namespace

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double dbm_per_hz_to_w_per_hz(double x_dbm_per_hz) {
    return db_to_linear(x_dbm_per_hz - 30.0);
}

ChannelConfig::ChannelConfig(double bandwidth_hz, double pathloss_const_linear,
                             double pathloss_exponent, double reference_distance_m,
                             double distance_m, double noise_psd_w_per_hz,
                             double p_max_w)
    : bandwidth_hz_(bandwidth_hz),
      pathloss_const_linear_(pathloss_const_linear),
      pathloss_exponent_(pathloss_exponent),
      reference_distance_m_(reference_distance_m),
      distance_m_(distance_m),
      noise_psd_w_per_hz_(noise_psd_w_per_hz),
      p_max_w_(p_max_w) {
    require_positive(bandwidth_hz_, "bandwidth_hz");
    require_positive(pathloss_const_linear_, "pathloss_const_linear");
    require_positive(pathloss_exponent_, "pathloss_exponent");
    require_positive(reference_distance_m_, "reference_distance_m");
    require_positive(distance_m_, "distance_m");
    require_positive(noise_psd_w_per_hz_, "noise_psd_w_per_hz");
    require_positive(p_max_w_, "p_max_w");
    composite_gain_ = pathloss_const_linear_ *
                      std::pow(reference_distance_m_ / distance_m_, pathloss_exponent_);
    noise_power_w_ = noise_psd_w_per_hz_ * bandwidth_hz_;
    require_positive(composite_gain_, "composite_gain");
    require_positive(noise_power_w_, "noise_power");
}

double rate_bps(double p_w, const ChannelConfig& ch) {
    if (p_w < 0.0 || !std::isfinite(p_w)) {
        throw std::domain_error("rate_bps: transmit power must be nonnegative");
    }
    const double snr = ch.composite_gain() * p_w / ch.noise_power_w();
    return ch.bandwidth_hz() * std::log1p(snr) / kLn2;
}

double min_rate_inverse(const ChannelConfig& ch) {
    return 1.0 / rate_bps(ch.p_max_w(), ch);
}

double rate_inverse_to_power(double xi_s_per_bit, const ChannelConfig& ch) {
    if (!(xi_s_per_bit > 0.0)) {
        throw std::domain_error("rate_inverse_to_power: rate inverse must be positive");
    }
    const double floor = min_rate_inverse(ch);
    if (xi_s_per_bit < floor * (1.0 - 1e-12)) {
        throw InfeasiblePowerError(
            "rate_inverse_to_power: rate inverse below the peak-power floor");
    }
    const double p = std::expm1(kLn2 / (ch.bandwidth_hz() * xi_s_per_bit)) *
                     ch.noise_power_w() / ch.composite_gain();
    return std::min(p, ch.p_max_w());
}

}  // namespace mecsched
