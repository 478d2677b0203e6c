#include "mecsched/config_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "mecsched/errors.hpp"

namespace mecsched {

namespace {
using ordered_json = nlohmann::ordered_json;

constexpr double kDefaultG0Db = -40.0;
constexpr double kDefaultN0DbmPerHz = -174.0;

double linear_to_db(double x) { return 10.0 * std::log10(x); }

double get_number(const ordered_json& j, const char* key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw ConfigError(std::string("config key '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}
}  // namespace

RunConfig default_run_config() {
    const ChannelConfig channel(1e6, db_to_linear(kDefaultG0Db), 4.0, 1.0, 100.0,
                                dbm_per_hz_to_w_per_hz(kDefaultN0DbmPerHz), 0.1);
    return RunConfig{InstanceSpec{20, 1000.0, 797.5, 1, channel, ServerConfig(1e9)}, 0.0, {}, {}};
}

RunConfig parse_run_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    static const std::set<std::string> known = {
        "n_tasks",  "d_avg_bits", "c_avg_cycles_per_bit", "bandwidth_hz",
        "g0_db",    "theta",      "l0_m",                 "l_m",
        "n0_dbm_per_hz", "p_max_w", "f_ser_hz",           "eta",
        "seed",     "d_bits",     "c_cycles_per_bit"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    try {
        const double bandwidth = get_number(j, "bandwidth_hz", 1e6);
        const double g0_db = get_number(j, "g0_db", kDefaultG0Db);
        const double theta = get_number(j, "theta", 4.0);
        const double l0 = get_number(j, "l0_m", 1.0);
        const double l = get_number(j, "l_m", 100.0);
        const double n0_dbm = get_number(j, "n0_dbm_per_hz", kDefaultN0DbmPerHz);
        const double p_max = get_number(j, "p_max_w", 0.1);
        const ChannelConfig channel(bandwidth, db_to_linear(g0_db), theta, l0, l,
                                    dbm_per_hz_to_w_per_hz(n0_dbm), p_max);

        int n_tasks = 20;
        if (j.contains("n_tasks")) {
            if (!j.at("n_tasks").is_number_integer() && !j.at("n_tasks").is_number_unsigned()) {
                throw ConfigError("config key 'n_tasks' must be an integer");
            }
            n_tasks = j.at("n_tasks").get<int>();
        }
        RunConfig cfg{InstanceSpec{n_tasks,
                                   get_number(j, "d_avg_bits", 1000.0),
                                   get_number(j, "c_avg_cycles_per_bit", 797.5),
                                   0,
                                   channel,
                                   ServerConfig(get_number(j, "f_ser_hz", 1e9))},
                      get_number(j, "eta", 0.0),
                      {},
                      {}};
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned() &&
                !(j.at("seed").is_number_integer() && j.at("seed").get<long long>() >= 0)) {
                throw ConfigError("config key 'seed' must be a nonnegative integer");
            }
            cfg.instance.seed = j.at("seed").get<std::uint64_t>();
        } else {
            cfg.instance.seed = 1;
        }
        if (cfg.eta < 0.0) {
            throw ConfigError("config key 'eta' must be nonnegative");
        }

        if (j.contains("d_bits")) {
            cfg.explicit_d_bits = j.at("d_bits").get<std::vector<double>>();
        }
        if (j.contains("c_cycles_per_bit")) {
            cfg.explicit_c_cycles_per_bit = j.at("c_cycles_per_bit").get<std::vector<double>>();
        }
        if (cfg.explicit_d_bits.size() != cfg.explicit_c_cycles_per_bit.size()) {
            throw ConfigError("d_bits and c_cycles_per_bit must be given together");
        }
        if (!cfg.explicit_d_bits.empty()) {
            cfg.instance.n_tasks = static_cast<int>(cfg.explicit_d_bits.size());
        }
        cfg.instance.validate();
        return cfg;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
}

std::string run_config_to_json(const RunConfig& cfg) {
    ordered_json j;
    j["n_tasks"] = cfg.instance.n_tasks;
    j["d_avg_bits"] = cfg.instance.d_avg_bits;
    j["c_avg_cycles_per_bit"] = cfg.instance.c_avg_cycles_per_bit;
    j["bandwidth_hz"] = cfg.instance.channel.bandwidth_hz();
    j["g0_db"] = linear_to_db(cfg.instance.channel.pathloss_const_linear());
    j["theta"] = cfg.instance.channel.pathloss_exponent();
    j["l0_m"] = cfg.instance.channel.reference_distance_m();
    j["l_m"] = cfg.instance.channel.distance_m();
    j["n0_dbm_per_hz"] = linear_to_db(cfg.instance.channel.noise_psd_w_per_hz()) + 30.0;
    j["p_max_w"] = cfg.instance.channel.p_max_w();
    j["f_ser_hz"] = cfg.instance.server.cpu_hz;
    j["eta"] = cfg.eta;
    j["seed"] = cfg.instance.seed;
    if (!cfg.explicit_d_bits.empty()) {
        j["d_bits"] = cfg.explicit_d_bits;
        j["c_cycles_per_bit"] = cfg.explicit_c_cycles_per_bit;
    }
    return j.dump(2);
}

Instance realize_instance(const RunConfig& cfg) {
    if (!cfg.explicit_d_bits.empty()) {
        Instance inst{{}, cfg.instance.channel, cfg.instance.server};
        inst.tasks.reserve(cfg.explicit_d_bits.size());
        for (std::size_t i = 0; i < cfg.explicit_d_bits.size(); ++i) {
            inst.tasks.emplace_back(cfg.explicit_d_bits[i], cfg.explicit_c_cycles_per_bit[i]);
        }
        return inst;
    }
    return generate_instance(cfg.instance);
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (!field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mecsched
