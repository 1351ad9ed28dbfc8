#pragma once

namespace unruh_otto::specfun {

struct SeriesConfig {
    double rel_tol = 1e-10;
    long max_terms = 1'000'000;
    // Minimum distance of a Lerch shift from {0, -1, -2, ...} and of y from {2 pi k}.
    double pole_guard = 1e-6;

    /// Throws DomainError unless 0 < rel_tol < 1, max_terms >= 1, pole_guard > 0.
    void validate() const;
};

/// Arguments of the response kernel: x = +-omega/alpha, y = 2 alpha tau = 2 artanh(v).
struct KernelArgs {
    double x = 0.0;
    double y = 0.0;
};

/// Lerch transcendent phi(z, s, a) = sum_{k>=0} z^k / (k + a)^s for real z in [0, 1], s >= 1.
///
/// Direct summation with a geometric tail bound when z is small enough for that to
/// be cheap; otherwise a block of direct terms followed by an Euler-Maclaurin tail
/// whose integral part is an incomplete-gamma expression, so z -> 1 costs O(1).
/// Negative shifts are accepted for integer s as long as they stay off the poles.
///
/// Throws DomainError for (z, s) = (1, 1), z outside [0, 1], s < 1, or a non-integer s
/// with a < 0; PoleProximity when a is within pole_guard of a non-positive integer
/// (or a <= pole_guard at z = 1); NonConvergence when max_terms is exhausted.
double lerch_phi(double z, double s, double a, const SeriesConfig& cfg = {});

/// Generalised exponential integral E_s(x) = int_1^inf e^{-x u} u^{-s} du for s >= 1, x >= 0.
double expint_e(double s, double x);

/// Response kernel J(x, y) built from two Lerch differences.
///
/// Heaviside convention theta(0) = 0. Only the theta term depends on the sign of x,
/// so J(a, y) - J(-a, y) = a y / 8 holds to rounding.
double j_kernel(KernelArgs args, const SeriesConfig& cfg = {});

} // namespace unruh_otto::specfun
