#pragma once

#include <cstdint>

namespace gsphere {

/// 64-bit linear congruential generator, the single source of randomness in the library.
///
///   state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
///   output = state >> 32
///
/// below(n) maps an output into [0, n) as (output * n) >> 32. Seeds are used as the
/// initial state, so a seed reproduces the same stream on every platform.
class Lcg64 {
public:
    static constexpr std::uint64_t multiplier = 6364136223846793005ull;
    static constexpr std::uint64_t increment = 1442695040888963407ull;

    explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint32_t next() noexcept {
        state_ = state_ * multiplier + increment;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    std::uint32_t below(std::uint32_t n) noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(next()) * n) >> 32);
    }

    /// Uniform in [0, 1).
    double unit() noexcept { return next() / 4294967296.0; }

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Seed of trial `index` in a seeded batch.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    Lcg64 g(seed ^ (index * 0x9E3779B97F4A7C15ull));
    std::uint64_t hi = g.next(), lo = g.next();
    return (hi << 32) | lo;
}

} // namespace gsphere
