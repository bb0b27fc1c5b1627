#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace hml {

// Deterministic generator used for every seeded experiment. splitmix64 keeps
// the stream identical across platforms and compilers, which std::normal_distribution
// would not guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::complex<double> complex_normal() {
        double re = normal();
        double im = normal();
        return {re, im};
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x9E3779B9ull;

} // namespace hml
