#pragma once

#include <array>
#include <cstdint>

namespace comono {

/// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Stateless: output is a pure function of (key, counter),
/// so any draw index can be generated independently and in any order.
class Philox4x32 {
  public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter counter, Key key);
};

/// Uniform draws keyed by (seed, draw index, stream).
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Two independent 64-bit words for draw `index` on `stream`.
    std::array<std::uint64_t, 2> bits(std::uint64_t index, std::uint32_t stream = 0) const;

    /// Maps 64 random bits to a double in [0,1) with 53 bits of resolution.
    static double to_unit(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1p-53; }

  private:
    std::uint64_t seed_;
};

}  // namespace comono
