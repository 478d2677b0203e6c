#ifndef MECSCHED_CHANNEL_HPP
#define MECSCHED_CHANNEL_HPP

namespace mecsched {

/// Converts a decibel value to a linear ratio, 10^(x/10).
double db_to_linear(double x_db);

/// Converts a dBm-referenced spectral density to W/Hz.
double dbm_per_hz_to_w_per_hz(double x_dbm_per_hz);

/// Wireless link between the device and the edge server.
///
/// All fields are SI (Hz, m, W, W/Hz). dB/dBm conversion happens at config
/// parsing only; this type never sees decibels. The composite link gain
/// g0*(L0/L)^theta and the noise power N0*omega are computed once at
/// construction.
class ChannelConfig {
public:
    ChannelConfig(double bandwidth_hz, double pathloss_const_linear,
                  double pathloss_exponent, double reference_distance_m,
                  double distance_m, double noise_psd_w_per_hz, double p_max_w);

    double bandwidth_hz() const { return bandwidth_hz_; }
    double pathloss_const_linear() const { return pathloss_const_linear_; }
    double pathloss_exponent() const { return pathloss_exponent_; }
    double reference_distance_m() const { return reference_distance_m_; }
    double distance_m() const { return distance_m_; }
    double noise_psd_w_per_hz() const { return noise_psd_w_per_hz_; }
    double p_max_w() const { return p_max_w_; }

    /// Composite linear gain g0*(L0/L)^theta.
    double composite_gain() const { return composite_gain_; }
    /// Receiver noise power N0*omega in W.
    double noise_power_w() const { return noise_power_w_; }

private:
    double bandwidth_hz_;
    double pathloss_const_linear_;
    double pathloss_exponent_;
    double reference_distance_m_;
    double distance_m_;
    double noise_psd_w_per_hz_;
    double p_max_w_;
    double composite_gain_;
    double noise_power_w_;
};

/// Uplink rate in bits/s at transmit power p_w: omega*log2(1 + G*p/PN).
/// Strictly increasing and concave in p; rate(0) = 0. Throws std::domain_error
/// for negative power.
double rate_bps(double p_w, const ChannelConfig& ch);

/// Smallest achievable seconds-per-bit, 1/rate(p_max). Lower box bound for
/// every rate-inverse variable.
double min_rate_inverse(const ChannelConfig& ch);

/// Maps a rate inverse (seconds per bit) back to the transmit power that
/// realizes it. Requires xi >= min_rate_inverse up to 1e-12 relative slack
/// (result is clamped to p_max); throws InfeasiblePowerError below that and
/// std::domain_error for xi <= 0.
double rate_inverse_to_power(double xi_s_per_bit, const ChannelConfig& ch);

}  // namespace mecsched

#endif
