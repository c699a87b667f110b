#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

namespace acaps {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerance used to decide that a flux ratio sits exactly on a threshold.
inline constexpr double kThresholdTol = 1e-12;

// Rounds x to the nearest integer when it is within kThresholdTol of it.
inline double snap(double x) {
    double r = std::round(x);
    return std::abs(x - r) < kThresholdTol ? r : x;
}

inline std::optional<long> as_integer(double x) {
    double r = std::round(x);
    if (std::abs(x - r) < kThresholdTol) return static_cast<long>(r);
    return std::nullopt;
}

// Greatest integer strictly below y.
inline long floor_strict(double y) {
    double s = snap(y);
    return static_cast<long>(std::ceil(s)) - 1;
}

}  // namespace acaps

namespace acaps {

struct Spinor {
    Complex up;
    Complex down;
};

inline double norm(const Spinor& s) { return std::sqrt(std::norm(s.up) + std::norm(s.down)); }

}  // namespace acaps
