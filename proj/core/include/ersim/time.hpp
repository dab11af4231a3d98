#pragma once

#include <chrono>
#include <cstdint>

namespace ersim {

// Simulated time and protocol durations share one integral microsecond
// clock. The event queue resolves ties at this granularity.
using SimTime = std::chrono::microseconds;
using Duration = std::chrono::microseconds;

// Fractional durations, used where expectations over probabilities appear.
using FracDuration = std::chrono::duration<double, std::micro>;

using namespace std::chrono_literals;

constexpr double to_seconds(SimTime t) {
  return std::chrono::duration<double>(t).count();
}

constexpr SimTime from_seconds(double s) {
  return std::chrono::round<SimTime>(std::chrono::duration<double>(s));
}

}  // namespace ersim
