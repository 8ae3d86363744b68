#include <doctest.h>

#include <cmath>
#include <set>

#include "comono/rng.hpp"

using namespace comono;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    // Random123 kat_vectors.
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) ==
          Philox4x32::Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          Philox4x32::Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          Philox4x32::Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("draws are keyed by seed, index and stream") {
    const CounterRng a(42), b(42), c(43);
    CHECK(a.bits(7) == b.bits(7));
    CHECK(a.bits(7) != c.bits(7));
    CHECK(a.bits(7) != a.bits(8));
    CHECK(a.bits(7, 0) != a.bits(7, 1));
    // High index bits reach the counter.
    CHECK(a.bits(1) != a.bits(1 + (std::uint64_t{1} << 32)));
}

TEST_CASE("unit mapping") {
    CHECK(CounterRng::to_unit(0) == 0.0);
    CHECK(CounterRng::to_unit(~std::uint64_t{0}) < 1.0);
    CHECK(CounterRng::to_unit(~std::uint64_t{0}) == 1.0 - 0x1p-53);
}

TEST_CASE("uniform moments") {
    const CounterRng rng(2024);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = CounterRng::to_unit(rng.bits(i)[1]);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    CHECK(std::fabs(mean - 0.5) <= 5.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::fabs(sum2 / n - 1.0 / 3.0) <= 5.0 * std::sqrt(4.0 / 45.0 / n));
}
