#pragma once

#include <chrono>
#include <compare>
#include <cstdint>

namespace wrc {

/// A point on the simulated timeline, microsecond resolution.
/// Deliberately distinct from wall-clock types: simulated time only moves
/// when the kernel advances it.
struct SimTime {
    std::int64_t us = 0;

    static constexpr SimTime zero() { return SimTime{0}; }
    static constexpr SimTime fromUs(std::int64_t u) { return SimTime{u}; }
    static constexpr SimTime fromMs(std::int64_t ms) { return SimTime{ms * 1000}; }

    constexpr double seconds() const { return static_cast<double>(us) * 1e-6; }
    constexpr double millis() const { return static_cast<double>(us) * 1e-3; }

    auto operator<=>(const SimTime&) const = default;
};

using SimDuration = std::chrono::microseconds;

constexpr SimTime operator+(SimTime t, SimDuration d) {
    return SimTime{t.us + d.count()};
}
constexpr SimTime operator-(SimTime t, SimDuration d) {
    return SimTime{t.us - d.count()};
}
constexpr SimDuration operator-(SimTime a, SimTime b) {
    return SimDuration{a.us - b.us};
}

}  // namespace wrc
