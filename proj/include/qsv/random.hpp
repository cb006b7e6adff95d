#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace qsv {

/// Anything that yields uniform doubles in [0, 1).
template <typename S>
concept uniform_source = requires(S s) {
    { s.next_uniform() } -> std::convertible_to<double>;
};

/// Deterministic seedable random source.
///
/// Wraps std::mt19937_64 and maps each 64-bit draw to a double in [0, 1)
/// by keeping the top 53 bits: (x >> 11) * 2^-53. Both the engine and the
/// mapping are fully specified, so a given seed yields the same stream on
/// every run.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qsv
