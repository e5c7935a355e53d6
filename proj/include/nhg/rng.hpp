// Deterministic, platform-independent random streams. Every Monte Carlo loop
// derives a per-sample generator from (run seed, stream tag, sample index) so
// results do not depend on evaluation order or worker count.

#ifndef NHG_RNG_HPP
#define NHG_RNG_HPP

#include <cstdint>
#include <string_view>

namespace nhg {

struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
};

/// FNV-1a over the tag string; used to give each operation its own stream.
constexpr uint64_t stream_tag(std::string_view name) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Per-sample generator: mixes (seed, tag, index) through one SplitMix64 round each.
inline SplitMix64 sample_rng(uint64_t run_seed, uint64_t tag, uint64_t index) {
    SplitMix64 mixer(run_seed ^ tag);
    mixer.state ^= mixer.next() + index * 0x9e3779b97f4a7c15ULL;
    mixer.next();
    return mixer;
}

/// Radical-inverse (van der Corput) sequence value for Halton sampling.
inline double radical_inverse(uint64_t index, uint32_t base) {
    double inv = 1.0 / base, frac = inv, value = 0.0;
    while (index > 0) {
        value += static_cast<double>(index % base) * frac;
        index /= base;
        frac *= inv;
    }
    return value;
}

}  // namespace nhg

#endif
