#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace patav {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of replicate `index` under master seed `seed`:
/// splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Seedable 64-bit generator (std::mt19937_64, whose output sequence is
/// fixed by the standard) with bias-free bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform on [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform on [0, bound), bound >= 1.
    mpz_class below(const mpz_class& bound);

    /// Independent stream for replicate `index`.
    static Rng for_replicate(std::uint64_t seed, std::uint64_t index) { return Rng(derive_seed(seed, index)); }

private:
    std::mt19937_64 engine_;
};

} // namespace patav
