#include <cmath>
#include <limits>

#include <stdexcept>

#include <doctest.h>

#include "mecsched/channel.hpp"
#include "mecsched/energy_kernel.hpp"
#include "mecsched/rng.hpp"
#include "support/reference_solvers.hpp"

using namespace mecsched;

namespace {
// unit channel: bandwidth 1 Hz, unit gain and noise, peak 1 W => rate(1) = 1
ChannelConfig unit_channel() { return ChannelConfig(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0); }

ChannelConfig reference_channel() {
    return ChannelConfig(1e6, db_to_linear(-40.0), 4.0, 1.0, 100.0,
                         dbm_per_hz_to_w_per_hz(-174.0), 0.1);
}

constexpr double kLn2 = 0.6931471805599453094;
}  // namespace

TEST_CASE("energy kernel point values at unit bandwidth") {
    const ChannelConfig ch = unit_channel();
    CHECK(energy_kernel(1.0, ch) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(energy_kernel(0.5, ch) == doctest::Approx(1.5).epsilon(1e-14));
    // tail limit ln 2
    CHECK(energy_kernel(1e6, ch) == doctest::Approx(kLn2).epsilon(1e-6));
    CHECK(energy_kernel(1e6, ch) == doctest::Approx(0.69314742078650777).epsilon(1e-12));
    CHECK_THROWS_AS(energy_kernel(0.0, ch), std::domain_error);
    CHECK_THROWS_AS(energy_kernel(-1.0, ch), std::domain_error);
}

TEST_CASE("kernel derivatives: closed forms at unit bandwidth") {
    const ChannelConfig ch = unit_channel();
    const auto d = energy_kernel_derivatives(1.0, ch);
    CHECK(d.first == doctest::Approx(-0.38629436111989062).epsilon(1e-13));
    CHECK(d.second == doctest::Approx(0.96090602783640285).epsilon(1e-13));

    // slope vanishes in the tail
    CHECK(std::abs(energy_kernel_derivatives(1e8, ch).first) < 1e-13);
    CHECK_THROWS_AS(energy_kernel_derivatives(0.0, ch), std::domain_error);
}

TEST_CASE("kernel curvature positive and matching finite differences") {
    const ChannelConfig ch = reference_channel();
    const double d0 = min_rate_inverse(ch);
    Xoshiro256StarStar rng(7201);
    for (int t = 0; t < 100; ++t) {
        const double xi = d0 * std::exp(std::log(1e4) * rng.uniform01());
        const auto d = energy_kernel_derivatives(xi, ch);
        CHECK(d.second > 0.0);
        CHECK(d.first <= 0.0);
        const double h = 1e-5 * xi;
        const double fd1 =
            (energy_kernel(xi + h, ch) - energy_kernel(xi - h, ch)) / (2.0 * h);
        CHECK(d.first == doctest::Approx(fd1).epsilon(1e-5));
        CHECK(d.second == doctest::Approx(testref::kernel_second_fd(xi, ch)).epsilon(1e-5));
    }
}

TEST_CASE("slope inversion: sentinel, point value, round trip, monotone") {
    const ChannelConfig unit = unit_channel();
    CHECK(std::isinf(kernel_slope_inverse(0.0, unit, 1.0)));

    // -kernel'(1) = 2 ln2 - 1 at unit bandwidth
    const double x_for_one = 2.0 * kLn2 - 1.0;
    CHECK(kernel_slope_inverse(x_for_one, unit, 1.0) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(kernel_slope_inverse(-1.0, unit, 1.0), std::domain_error);
    CHECK_THROWS_AS(kernel_slope_inverse(1.0, unit, 0.0), std::domain_error);

    const ChannelConfig ch = reference_channel();
    const double weight_c = 100.0 * ch.noise_power_w() / ch.composite_gain();
    const double d0 = min_rate_inverse(ch);
    Xoshiro256StarStar rng(7202);
    SUBCASE("inverts the kernel slope within 1e-9") {
        for (int t = 0; t < 100; ++t) {
            const double xi = d0 * std::exp(std::log(1e3) * rng.uniform01());
            const double x = -energy_kernel_derivatives(xi, ch).first * weight_c;
            CHECK(kernel_slope_inverse(x, ch, weight_c) ==
                  doctest::Approx(xi).epsilon(1e-9));
        }
    }
    SUBCASE("antitone in the slope aggregate") {
        for (int t = 0; t < 100; ++t) {
            double x1 = 10.0 * rng.uniform01() + 1e-6;
            double x2 = 10.0 * rng.uniform01() + 1e-6;
            if (x1 > x2) std::swap(x1, x2);
            if (x1 == x2) continue;
            CHECK(kernel_slope_inverse(x1, ch, weight_c) >=
                  kernel_slope_inverse(x2, ch, weight_c));
        }
    }
}
