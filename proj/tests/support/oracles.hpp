#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// evaluation paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace unruh_otto::testing {

/// Brute-force partial sum of sum_k z^k / (k + a)^s in long double, continued until the
/// geometric tail bound z^N (N + a)^{-s} / (1 - z) is below tol * |sum|. Requires z < 1, a > 0.
struct BruteLerch {
    long double value = 0.0L;
    long double tail_bound = 0.0L;
    long terms = 0;
};

inline BruteLerch brute_lerch(double z, double s, double a, long double tol = 1e-16L) {
    BruteLerch out;
    long double zk = 1.0L;
    for (long k = 0;; ++k) {
        out.value += zk * std::pow(static_cast<long double>(k) + a, -static_cast<long double>(s));
        zk *= z;
        out.terms = k + 1;
        out.tail_bound = zk * std::pow(static_cast<long double>(k + 1) + a, -static_cast<long double>(s)) /
                         (1.0L - z);
        if (out.tail_bound <= tol * std::abs(out.value)) return out;
    }
}

/// The hyperbolic-sine form of the accelerated Wightman function,
/// (1/4 pi^2) (alpha / (2 i sinh[(alpha dtau - i eps)/2]))^2.
inline std::complex<double> wightman_sinh(double alpha, double dtau, double epsilon) {
    using namespace std::complex_literals;
    const std::complex<double> arg = (alpha * dtau - 1i * epsilon) / 2.0;
    const std::complex<double> f = alpha / (2.0i * std::sinh(arg));
    return f * f / (4.0 * std::numbers::pi * std::numbers::pi);
}

/// Reference values from tests/oracles/freeze_values.py (40-digit partial sums with
/// interval tail bounds).
inline constexpr double kLerch_0_3__2__0_7 = 2.1594030237557744119;
inline constexpr double kJ_1_2 = 0.26187442592295239335;
inline constexpr double kJ_m1_2 = 0.011874425922952393354;
inline constexpr double kJ_half_2 = 0.15642323360384446759;
inline constexpr double kJ_mhalf_2 = 0.031423233603844467594;
inline constexpr double kCalP_0_3__0_5__0_9 = 0.24610040801302202526;

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Fixed-seed generator so every property run sees the same draws.
class Draws {
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

} // namespace unruh_otto::testing
