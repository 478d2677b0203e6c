#ifndef MECSCHED_RNG_HPP
#define MECSCHED_RNG_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace mecsched {

/// splitmix64 finalizer; also used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic sub-stream seed: mix64(master + GOLDEN * (index + 1)).
/// Growing the index range never perturbs earlier streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + 0x9e3779b97f4a7c15ull * (index + 1));
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** (Blackman/Vigna), seeded through splitmix64. Fixed, named and
/// portable: every platform and port reproduces identical streams from the
/// same 64-bit seed.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& s : state_) {
            s = sm.next();
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, scale]; exact zeros are redrawn.
    double uniform_positive(double scale) {
        double u = uniform01();
        while (u == 0.0) {
            u = uniform01();
        }
        return scale * u;
    }

    /// Uniform integer in [0, bound); modulo mapping, documented and portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Fisher-Yates permutation of 0..n-1.
    std::vector<int> permutation(int n) {
        std::vector<int> out(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = i;
        }
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<std::size_t>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(out[static_cast<std::size_t>(i)], out[j]);
        }
        return out;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace mecsched

#endif
