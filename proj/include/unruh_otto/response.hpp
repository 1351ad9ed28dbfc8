#pragma once

#include "unruh_otto/specfun.hpp"

#include <complex>
#include <vector>

namespace unruh_otto::response {

/// One isochoric stroke: initial population p over n excited levels, gap omega,
/// acceleration alpha, swing speed v and coupling g.
///
/// omega = 0 is accepted and evaluates the zero-gap limit, which the kernel
/// reaches continuously.
struct ResponseArgs {
    double p = 0.0;
    int n = 1;
    double omega = 1.0;
    double alpha = 1.0;
    double v = 0.9;
    double g = 1.0;

    void validate() const;
    /// omega / alpha.
    double gap_ratio() const { return omega / alpha; }
    /// 2 alpha tau_half = 2 artanh(v).
    double kernel_time() const;
    /// artanh(v) / alpha.
    double tau_half() const;
};

struct QuadratureConfig {
    // Wightman regulators, in units of tau_half, strictly decreasing.
    std::vector<double> epsilon_schedule = {1e-2, 5e-3, 2.5e-3};
    int image_terms = 64;
    // Integrate tau, tau' over [-domain_factor * tau_half, +domain_factor * tau_half].
    double domain_factor = 40.0;
    // Initial uniform panels along each axis before adaptive refinement.
    int grid = 64;
    bool extrapolate = true;
    double rel_tol = 1e-9;
    long max_panels = 200000;

    void validate() const;
};

struct QuadratureResult {
    double estimate = 0.0;
    double error_estimate = 0.0;
    // |Im| of the extrapolated integral; the check that it vanishes has already passed.
    double imag_residual = 0.0;
    // Real part of the integral at each regulator in the schedule.
    std::vector<double> per_epsilon;
    long panels = 0;
};

/// Lorentzian window tau_half^2 / (tau^2 + tau_half^2).
double switching(double tau, double tau_half);

/// Image-sum Wightman function -(1/4 pi^2) sum_{k=-K}^{K} (dtau - i eps - 2 pi i k / alpha)^{-2}.
std::complex<double> wightman(double alpha, double dtau, double epsilon, int image_terms);

/// Midpoint estimate of the omitted images |k| > K, to be added to the truncated sum.
/// Relative accuracy of the estimate is O(1 / K^2).
std::complex<double> wightman_tail(double alpha, double dtau, double epsilon, int image_terms);

/// Bound on the error of wightman() + wightman_tail() relative to the untruncated sum,
/// valid while |dtau| stays below 2 pi K / alpha.
double wightman_tail_bound(double alpha, double dtau, double epsilon, int image_terms);

/// g^2 [(1-p) J(-a, y) - (p/n) J(a, y)] with a = omega/alpha, y = 2 artanh(v).
double delta_p_closed(const ResponseArgs& args, const specfun::SeriesConfig& cfg = {});

/// g^2 (1-p) J(-a, y): the n -> infinity envelope of delta_p_closed.
double delta_p_limit_n_inf(const ResponseArgs& args, const specfun::SeriesConfig& cfg = {});

/// Brute-force evaluation of the windowed double integral over (tau, tau').
///
/// The square is integrated in the rotated coordinates dtau = tau - tau',
/// sigma = (tau + tau')/2 so the regulator ridge on the diagonal is a single
/// one-dimensional feature: an adaptive rule in dtau graded towards the ridge, and an
/// adaptive rule in sigma over the exact cross-section of the square. Each regulator
/// in the schedule is integrated separately and the results are extrapolated to
/// eps -> 0 by polynomial (Richardson) extrapolation.
///
/// error_estimate adds the adaptive-rule error, the extrapolation residual, the
/// domain-truncation change under doubling, and the image-sum tail bound.
/// Throws NonConvergence when a rule misses its tolerance within max_panels or the
/// imaginary part does not vanish within error_estimate.
QuadratureResult delta_p_quadrature(const ResponseArgs& args, const QuadratureConfig& qcfg = {});

} // namespace unruh_otto::response
