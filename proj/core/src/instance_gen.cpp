#include "mecsched/instance_gen.hpp"

#include <stdexcept>

#include "mecsched/rng.hpp"

namespace mecsched {

void InstanceSpec::validate() const {
    if (n_tasks < 1) {
        throw std::invalid_argument("InstanceSpec: n_tasks must be >= 1");
    }
    if (!(d_avg_bits > 0.0) || !(c_avg_cycles_per_bit > 0.0)) {
        throw std::invalid_argument("InstanceSpec: averages must be strictly positive");
    }
}

Instance generate_instance(const InstanceSpec& spec) {
    spec.validate();
    Xoshiro256StarStar rng(spec.seed);
    Instance inst{{}, spec.channel, spec.server};
    inst.tasks.reserve(static_cast<std::size_t>(spec.n_tasks));
    for (int i = 0; i < spec.n_tasks; ++i) {
        const double d = rng.uniform_positive(2.0 * spec.d_avg_bits);
        const double c = rng.uniform_positive(2.0 * spec.c_avg_cycles_per_bit);
        inst.tasks.emplace_back(d, c);
    }
    return inst;
}

}  // namespace mecsched
