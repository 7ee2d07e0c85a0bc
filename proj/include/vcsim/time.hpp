#pragma once

#include <cstdint>

namespace vcsim {

// Simulated time is an unsigned count of microseconds since simulation start.
using SimTime = std::uint64_t;
using Duration = std::uint64_t;

constexpr Duration kMicrosPerMilli = 1000ull;
constexpr Duration kMicrosPerSecond = 1'000'000ull;
constexpr Duration kMicrosPerHour = 3'600'000'000ull;

constexpr Duration micros(std::uint64_t v) { return v; }
constexpr Duration millis(std::uint64_t v) { return v * kMicrosPerMilli; }
constexpr Duration seconds(std::uint64_t v) { return v * kMicrosPerSecond; }
constexpr Duration hours(std::uint64_t v) { return v * kMicrosPerHour; }

constexpr double to_ms(Duration d) { return static_cast<double>(d) / 1e3; }
constexpr double to_s(Duration d) { return static_cast<double>(d) / 1e6; }

// Hour-of-day bucket; simulations start at midnight.
constexpr unsigned hour_of_day(SimTime t) {
    return static_cast<unsigned>((t / kMicrosPerHour) % 24ull);
}

} // namespace vcsim
