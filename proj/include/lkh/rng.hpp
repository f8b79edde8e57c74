#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace lkh {

// Deterministic, seedable, splittable generator: xoshiro256** seeded through
// SplitMix64.
//
// Stream discipline: substream k of a master seed s is seeded with
// substream_seed(s, k), the k-th output of SplitMix64 started at s. Every
// randomized routine takes an explicit seed and derives any internal streams
// this way, so results are reproducible per (parameters, seed) and
// independent of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    static std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    // Uniform on (0, 1], with 53-bit resolution.
    double uniform();

    // Standard normal via Box-Muller (pairs cached).
    double gaussian();

    // re and im independent standard normals.
    std::complex<double> complex_gaussian();

private:
    std::array<std::uint64_t, 4> state_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

}  // namespace lkh
