#include "patav/rng.hpp"

#include "patav/errors.hpp"

#include <vector>

namespace patav {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw ArgumentError("Rng::below: bound must be >= 1");
    // Reject the low 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

mpz_class Rng::below(const mpz_class& bound) {
    if (sgn(bound) <= 0) throw ArgumentError("Rng::below: bound must be >= 1");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
    std::vector<std::uint64_t> limbs(words);
    mpz_class r;
    for (;;) {
        for (std::size_t i = 0; i < words; ++i) limbs[i] = next();
        limbs[words - 1] &= top_mask;
        // Least significant word first, native endianness within words.
        mpz_import(r.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
        if (r < bound) return r;
    }
}

} // namespace patav
