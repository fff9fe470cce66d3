#pragma once

#include <cmath>

namespace smcland {

// Wraps an angle into (-pi, pi].
inline double wrap_pi(double a) {
    constexpr double two_pi = 2.0 * M_PI;
    a = std::fmod(a, two_pi);
    if (a <= -M_PI) {
        a += two_pi;
    } else if (a > M_PI) {
        a -= two_pi;
    }
    return a;
}

inline double clamp_sym(double x, double limit) {
    return std::max(-limit, std::min(limit, x));
}

}  // namespace smcland
