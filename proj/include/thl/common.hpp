#pragma once

// Shared error types, math constants and small utilities for the trace-Hardy
// library. Everything in thl is header-only, pure and thread-safe.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace thl {

inline constexpr double pi = 3.14159265358979323846264338328;
inline constexpr double euler_gamma = 0.57721566490153286060651209008;

// Evaluation hit a pole of the underlying special function.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An iterative scheme (series, quadrature, extrapolation, bisection) did not
// reach its tolerance within the configured caps.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter violated a documented range; the message names the bound.
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_nonpositive_integer(double x, double tol = 0.0) {
    if (x > 0.5) return false;
    double r = x - std::nearbyint(x);
    return std::abs(r) <= tol;
}

// Deterministic uniform double in [0,1). mt19937_64's output sequence is fixed
// by the standard; the explicit 53-bit mapping avoids the
// implementation-defined std::uniform_real_distribution.
inline double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * u01(rng);
}

// Thread cap: THL_THREADS if set and positive, else hardware concurrency.
inline unsigned thread_limit() {
    if (const char* env = std::getenv("THL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

}  // namespace thl
