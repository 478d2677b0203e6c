#include <cmath>
#include <limits>

#include <stdexcept>

#include <doctest.h>

#include "mecsched/config_io.hpp"
#include "mecsched/timeline.hpp"
#include "support/reference_solvers.hpp"

using namespace mecsched;

namespace {
ChannelConfig reference_channel() {
    return ChannelConfig(1e6, db_to_linear(-40.0), 4.0, 1.0, 100.0,
                         dbm_per_hz_to_w_per_hz(-174.0), 0.1);
}

/// Two tasks transmitting at exactly 1 Mbit/s: tx = 1 ms and 2 ms, exec = 0.8 ms each.
struct WorkedExample {
    Instance inst;
    PowerAllocation p;
};

WorkedExample worked_example() {
    const ChannelConfig ch = reference_channel();
    const double p_rate_1m = rate_inverse_to_power(1e-6, ch);
    Instance inst{{TaskSpec(1000.0, 800.0), TaskSpec(2000.0, 400.0)}, ch, ServerConfig(1e9)};
    return WorkedExample{inst, PowerAllocation::uniform(2, p_rate_1m)};
}
}  // namespace

TEST_CASE("task and server validation") {
    CHECK_THROWS_AS(TaskSpec(0.0, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(TaskSpec(-5.0, 100.0), std::invalid_argument);
    CHECK_THROWS_AS(TaskSpec(100.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ServerConfig(0.0), std::invalid_argument);
}

TEST_CASE("execution time") {
    const ServerConfig srv(1e9);
    CHECK(exec_time_s(TaskSpec(1000, 800), srv) == doctest::Approx(8e-4).epsilon(1e-15));
    CHECK(exec_time_s(TaskSpec(1000, 797.5), srv) == doctest::Approx(7.975e-4).epsilon(1e-15));
    CHECK(exec_time_s(TaskSpec(1000, 800), ServerConfig(2e9)) ==
          doctest::Approx(4e-4).epsilon(1e-15));
}

TEST_CASE("transmission time") {
    const ChannelConfig ch = reference_channel();
    // at peak power the rate is 4707020.26... bits/s
    CHECK(tx_time_s(TaskSpec(1000, 1), 0.1, ch) ==
          doctest::Approx(2.1244862868303494e-4).epsilon(1e-12));
    const double p_rate_1m = rate_inverse_to_power(1e-6, ch);
    CHECK(tx_time_s(TaskSpec(1000, 1), p_rate_1m, ch) == doctest::Approx(1e-3).epsilon(1e-9));
    CHECK(std::isinf(tx_time_s(TaskSpec(1000, 1), 0.0, ch)));
}

TEST_CASE("timeline on the worked two-task example") {
    const auto [inst, p] = worked_example();
    const Schedule s({0, 1});
    const Timeline tl = timeline(s, p, inst);
    CHECK(tl.ready_s[0] == doctest::Approx(1e-3).epsilon(1e-9));
    CHECK(tl.ready_s[1] == doctest::Approx(3e-3).epsilon(1e-9));
    CHECK(tl.completion_s[0] == doctest::Approx(1.8e-3).epsilon(1e-9));
    CHECK(tl.completion_s[1] == doctest::Approx(3.8e-3).epsilon(1e-9));
    CHECK(tl.makespan_s == tl.completion_s[1]);
    CHECK(makespan_closed_form(s, p, inst) == doctest::Approx(3.8e-3).epsilon(1e-9));
}

TEST_CASE("single task: makespan is tx + exec") {
    const ChannelConfig ch = reference_channel();
    Instance inst{{TaskSpec(1500, 650)}, ch, ServerConfig(1e9)};
    const PowerAllocation p = PowerAllocation::uniform(1, 0.05);
    const double expect =
        tx_time_s(inst.tasks[0], 0.05, ch) + exec_time_s(inst.tasks[0], inst.server);
    CHECK(timeline(Schedule({0}), p, inst).makespan_s ==
          doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("recursion equals closed form on random instances") {
    const RunConfig cfg = default_run_config();
    Xoshiro256StarStar rng(7301);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng.below(12));
        const Instance inst = testref::random_instance(cfg, n, rng.next());
        const PowerAllocation p =
            testref::random_powers(inst.channel, n, rng);
        const Schedule s{rng.permutation(n)};
        const double rec = timeline(s, p, inst).makespan_s;
        CHECK(makespan_closed_form(s, p, inst) == doctest::Approx(rec).epsilon(1e-12));
    }
}

TEST_CASE("timeline rejects corrupted permutations and size mismatches") {
    const auto [inst, p] = worked_example();
    CHECK_THROWS_AS(Schedule({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(timeline(Schedule({0}), p, inst), std::invalid_argument);
    CHECK_THROWS_AS(
        timeline(Schedule({0, 1}), PowerAllocation::uniform(3, 0.1), inst),
        std::invalid_argument);
}

TEST_CASE("timeline fields are strictly increasing") {
    const RunConfig cfg = default_run_config();
    Xoshiro256StarStar rng(7302);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng.below(10));
        const Instance inst = testref::random_instance(cfg, n, rng.next());
        const PowerAllocation p = testref::random_powers(inst.channel, n, rng);
        const Schedule s{rng.permutation(n)};
        const Timeline tl = timeline(s, p, inst);
        for (int j = 1; j < n; ++j) {
            CHECK(tl.ready_s[j] > tl.ready_s[j - 1]);
            CHECK(tl.completion_s[j] > tl.completion_s[j - 1]);
        }
        // completion minus own execution never precedes the input ready time
        for (int j = 0; j < n; ++j) {
            const double exec =
                exec_time_s(inst.tasks[static_cast<std::size_t>(s[j])], inst.server);
            CHECK(tl.completion_s[j] - exec >=
                  tl.ready_s[j] - 1e-15 * tl.makespan_s);
        }
    }
}

TEST_CASE("zero power yields the infinite-duration sentinel") {
    auto [inst, p] = worked_example();
    p.powers_w[1] = 0.0;
    p.validate(inst.channel);  // 0 is representable
    CHECK(std::isinf(timeline(Schedule({0, 1}), p, inst).makespan_s));
    CHECK_THROWS_AS(PowerAllocation({{0.2, 0.1}}).validate(inst.channel),
                    std::invalid_argument);
    CHECK_THROWS_AS(PowerAllocation({{-0.01, 0.1}}).validate(inst.channel),
                    std::invalid_argument);
}

TEST_CASE("transmit energy: reference value, definition, schedule independence") {
    const ChannelConfig ch = reference_channel();
    const ServerConfig srv(1e9);
    Instance inst{{}, ch, srv};
    for (int i = 0; i < 20; ++i) {
        inst.tasks.emplace_back(1000.0, 500.0);
    }
    const PowerAllocation p = PowerAllocation::uniform(20, 0.1);
    CHECK(transmit_energy_j(p, inst) ==
          doctest::Approx(4.2489725736606988e-4).epsilon(1e-12));

    // single task at the 1 Mbit/s power: energy = p * 1e-3
    const double p_rate_1m = rate_inverse_to_power(1e-6, ch);
    Instance single{{TaskSpec(1000, 1)}, ch, srv};
    CHECK(transmit_energy_j(PowerAllocation::uniform(1, p_rate_1m), single) ==
          doctest::Approx(p_rate_1m * 1e-3).epsilon(1e-9));
}

TEST_CASE("energy is independent of the schedule, bit for bit") {
    const RunConfig cfg = default_run_config();
    Xoshiro256StarStar rng(7303);
    const Instance inst = testref::random_instance(cfg, 10, 99);
    const PowerAllocation p = testref::random_powers(inst.channel, 10, rng);
    const ObjectiveValue a = objective(Schedule{rng.permutation(10)}, p, 3.0, inst);
    const ObjectiveValue b = objective(Schedule{rng.permutation(10)}, p, 3.0, inst);
    CHECK(a.energy_j == b.energy_j);
}

TEST_CASE("raising one power never raises the makespan") {
    const RunConfig cfg = default_run_config();
    Xoshiro256StarStar rng(7304);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng.below(8));
        const Instance inst = testref::random_instance(cfg, n, rng.next());
        PowerAllocation p = testref::random_powers(inst.channel, n, rng);
        const Schedule s{rng.permutation(n)};
        const double before = timeline(s, p, inst).makespan_s;
        const auto i = static_cast<std::size_t>(rng.below(n));
        p.powers_w[i] = p.powers_w[i] + (0.1 - p.powers_w[i]) * rng.uniform01();
        CHECK(timeline(s, p, inst).makespan_s <= before + 1e-12 * before);
    }
}

TEST_CASE("weighted objective composition") {
    const auto [inst, p] = worked_example();
    const Schedule s({0, 1});
    const ObjectiveValue v0 = objective(s, p, 0.0, inst);
    CHECK(v0.weighted_s == v0.delay_s);

    const ObjectiveValue v100 = objective(s, p, 100.0, inst);
    CHECK(v100.weighted_s ==
          doctest::Approx(v100.delay_s + 100.0 * v100.energy_j).epsilon(1e-15));
    CHECK(v100.delay_s == doctest::Approx(3.8e-3).epsilon(1e-9));
    CHECK_THROWS_AS(objective(s, p, -1.0, inst), std::domain_error);
}
