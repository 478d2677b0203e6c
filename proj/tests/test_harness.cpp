#include <cmath>
#include <cstdlib>
#include <set>

#include <doctest.h>

#include "mecsched/config_io.hpp"
#include "mecsched/errors.hpp"
#include "mecsched/experiments.hpp"
#include "mecsched/instance_gen.hpp"
#include "mecsched/rng.hpp"

using namespace mecsched;

TEST_CASE("generator streams are deterministic and well distributed") {
    Xoshiro256StarStar a(123456);
    Xoshiro256StarStar b(123456);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next() == b.next());
    }
    Xoshiro256StarStar c(1);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = c.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("derived seeds are collision-free over a wide index range") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t r = 0; r < 4096; ++r) {
        seen.insert(derive_seed(7, r));
    }
    CHECK(seen.size() == 4096);
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
    CHECK(derive_seed(7, 3) != derive_seed(8, 3));
}

TEST_CASE("instance generation: determinism, support and mean") {
    const RunConfig cfg = default_run_config();
    InstanceSpec spec = cfg.instance;
    spec.seed = 99;
    CHECK(instance_fingerprint(generate_instance(spec)) ==
          instance_fingerprint(generate_instance(spec)));

    spec.n_tasks = 100000;
    const Instance big = generate_instance(spec);
    double mean_d = 0.0;
    for (const auto& t : big.tasks) {
        CHECK(t.input_bits > 0.0);
        CHECK(t.input_bits <= 2.0 * spec.d_avg_bits);
        CHECK(t.workload_cycles_per_bit > 0.0);
        CHECK(t.workload_cycles_per_bit <= 2.0 * spec.c_avg_cycles_per_bit);
        mean_d += t.input_bits;
    }
    mean_d /= static_cast<double>(big.tasks.size());
    CHECK(mean_d == doctest::Approx(spec.d_avg_bits).epsilon(0.01));

    InstanceSpec bad = cfg.instance;
    bad.n_tasks = 0;
    CHECK_THROWS_AS(generate_instance(bad), std::invalid_argument);
}

TEST_CASE("config parsing: defaults, overrides, rejects") {
    const RunConfig def = parse_run_config("{}");
    CHECK(def.instance.n_tasks == 20);
    CHECK(def.instance.d_avg_bits == 1000.0);
    CHECK(def.instance.c_avg_cycles_per_bit == 797.5);
    CHECK(def.instance.channel.bandwidth_hz() == 1e6);
    CHECK(def.instance.channel.p_max_w() == 0.1);
    CHECK(def.instance.server.cpu_hz == 1e9);
    CHECK(def.instance.seed == 1);
    CHECK(def.eta == 0.0);
    CHECK(def.instance.channel.pathloss_const_linear() ==
          doctest::Approx(1e-4).epsilon(1e-13));

    const RunConfig cfg = parse_run_config(
        R"({"n_tasks": 5, "eta": 2.5, "seed": 77, "p_max_w": 0.2, "g0_db": -30})");
    CHECK(cfg.instance.n_tasks == 5);
    CHECK(cfg.eta == 2.5);
    CHECK(cfg.instance.seed == 77);
    CHECK(cfg.instance.channel.p_max_w() == 0.2);

    CHECK_THROWS_AS(parse_run_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"unknown_key": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"eta": -1})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"n_tasks": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"p_max_w": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"d_bits": [100]})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("[1,2]"), ConfigError);
}

TEST_CASE("explicit task arrays override generation") {
    const RunConfig cfg = parse_run_config(
        R"({"d_bits": [100, 200], "c_cycles_per_bit": [50, 60]})");
    CHECK(cfg.instance.n_tasks == 2);
    const Instance inst = realize_instance(cfg);
    CHECK(inst.tasks[0].input_bits == 100.0);
    CHECK(inst.tasks[1].workload_cycles_per_bit == 60.0);
}

TEST_CASE("config echo round-trips through the parser") {
    RunConfig cfg = default_run_config();
    cfg.eta = 12.5;
    cfg.instance.seed = 4242;
    const RunConfig back = parse_run_config(run_config_to_json(cfg));
    CHECK(back.eta == cfg.eta);
    CHECK(back.instance.seed == cfg.instance.seed);
    CHECK(back.instance.channel.noise_psd_w_per_hz() ==
          doctest::Approx(cfg.instance.channel.noise_psd_w_per_hz()).epsilon(1e-12));
}

TEST_CASE("double formatting round-trips exactly") {
    for (double v : {1.0 / 3.0, 1e-300, 0.1, 4707020.2627288358, -2.5e17, 0.0}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
        CHECK(s.find(',') == std::string::npos);
    }
}

TEST_CASE("csv escaping and parsing round-trip") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("q\"q") == "\"q\"\"q\"");
    const auto rows = parse_csv("a,\"b,c\",d\n1,\"x\"\"y\",2\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][1] == "b,c");
    CHECK(rows[1][1] == "x\"y");
}

TEST_CASE("fig2: pairing, dominance and determinism on a small run") {
    RunConfig cfg = default_run_config();
    cfg.instance.seed = 7;
    Fig2Params params;
    params.n_values = {3, 5};
    params.rate_scenarios_bps = {1.25e6};
    params.replicates = 8;
    const ExperimentResult a = run_fig2(cfg, params);
    const ExperimentResult b = run_fig2(cfg, params);
    CHECK(experiment_to_csv(a) == experiment_to_csv(b));
    REQUIRE(a.rows.size() == 4);  // 2 metrics x 2 task counts

    for (std::size_t i = 0; i + 1 < a.rows.size(); i += 2) {
        const ExperimentRow& opt = a.rows[i];
        const ExperimentRow& rnd = a.rows[i + 1];
        REQUIRE(opt.metric.find("johnson") != std::string::npos);
        REQUIRE(rnd.metric.find("random") != std::string::npos);
        REQUIRE(opt.values.size() == rnd.values.size());
        for (std::size_t r = 0; r < opt.values.size(); ++r) {
            CHECK(opt.values[r] <= rnd.values[r] * (1.0 + 1e-15));
        }
    }
}

TEST_CASE("fig3: proposed never loses to the benchmark") {
    RunConfig cfg = default_run_config();
    cfg.instance.seed = 11;
    cfg.instance.n_tasks = 6;
    Fig3Params params;
    params.eta_values = {0.01, 100.0};
    params.replicates = 4;
    const ExperimentResult res = run_fig3(cfg, params);
    REQUIRE(res.rows.size() == 4);
    for (std::size_t i = 0; i + 1 < res.rows.size(); i += 2) {
        const ExperimentRow& prop = res.rows[i];
        const ExperimentRow& bench = res.rows[i + 1];
        for (std::size_t r = 0; r < prop.values.size(); ++r) {
            CHECK(prop.values[r] <= bench.values[r] * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("fig4: proposed energy never exceeds the peak-power baseline") {
    RunConfig cfg = default_run_config();
    cfg.instance.seed = 13;
    cfg.instance.n_tasks = 6;
    Fig4Params params;
    params.eta_values = {100.0};
    params.f_ser_values = {1e9};
    params.replicates = 4;
    const ExperimentResult res = run_fig4(cfg, params);
    REQUIRE(res.rows.size() == 3);
    const ExperimentRow& energy = res.rows[1];
    const ExperimentRow& baseline = res.rows[2];
    REQUIRE(energy.metric.find("energy_proposed") != std::string::npos);
    REQUIRE(baseline.metric.find("baseline") != std::string::npos);
    for (std::size_t r = 0; r < energy.values.size(); ++r) {
        CHECK(energy.values[r] <= baseline.values[r] * (1.0 + 1e-12));
    }
}

TEST_CASE("growing the replicate count leaves earlier replicates untouched") {
    RunConfig cfg = default_run_config();
    cfg.instance.seed = 17;
    cfg.instance.n_tasks = 5;
    Fig3Params small;
    small.eta_values = {1.0};
    small.replicates = 3;
    Fig3Params large = small;
    large.replicates = 6;
    const ExperimentResult a = run_fig3(cfg, small);
    const ExperimentResult b = run_fig3(cfg, large);
    for (std::size_t row = 0; row < a.rows.size(); ++row) {
        for (std::size_t r = 0; r < a.rows[row].values.size(); ++r) {
            CHECK(a.rows[row].values[r] == b.rows[row].values[r]);
        }
    }
}

TEST_CASE("csv rows rebuild their means exactly") {
    RunConfig cfg = default_run_config();
    cfg.instance.seed = 5;
    Fig2Params params;
    params.n_values = {4};
    params.rate_scenarios_bps = {1.25e6};
    params.replicates = 5;
    const ExperimentResult res = run_fig2(cfg, params);
    const auto rows = parse_csv(experiment_to_csv(res));
    REQUIRE(rows.size() == res.rows.size() + 1);  // header
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 5);
        double sum = 0.0;
        int count = 0;
        const std::string& packed = rows[i][4];
        std::size_t pos = 0;
        while (pos < packed.size()) {
            std::size_t next = packed.find(';', pos);
            if (next == std::string::npos) {
                next = packed.size();
            }
            sum += std::strtod(packed.substr(pos, next - pos).c_str(), nullptr);
            ++count;
            pos = next + 1;
        }
        CHECK(count == std::atoi(rows[i][3].c_str()));
        const double mean = std::strtod(rows[i][2].c_str(), nullptr);
        CHECK(mean == doctest::Approx(sum / count).epsilon(1e-15));
    }
}

TEST_CASE("validation suite passes quietly") {
    CHECK(run_validation_suite(2024, false));
}
