#pragma once

#include <cstdint>

namespace symgrowth {

/// One SplitMix64 step: add the golden-ratio increment, then finalise.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

/// Counter-based stream: draw number `index` of stream `seed`. Pure, so any
/// implementation reproduces the same draws from (seed, index) alone.
constexpr std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(mix64(seed) ^ (index * 0xD1B54A32D192ED03ULL));
}

}  // namespace symgrowth
