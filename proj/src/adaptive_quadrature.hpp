#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration over a set of breakpoints.
// Internal to the library; not installed.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <vector>

namespace unruh_otto::detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

template <class T>
struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    T value{};
    double error = 0.0;
};

template <class T>
struct AdaptiveResult {
    T value{};
    double error = 0.0;
    long panels = 0;
    bool converged = false;
};

template <class T, class F>
Panel<T> gauss_kronrod_15(F& f, double lo, double hi) {
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const T fc = f(centre);
    T kronrod = fc * kKronrodWeights[7];
    T gauss = fc * kGaussWeights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const T sum = f(centre - dx) + f(centre + dx);
        kronrod += sum * kKronrodWeights[j];
        if (j % 2 == 1) gauss += sum * kGaussWeights[j / 2];
    }
    Panel<T> panel{lo, hi, kronrod * half, 0.0};
    panel.error = std::abs((kronrod - gauss) * half);
    return panel;
}

/// Integrates f over [breakpoints.front(), breakpoints.back()], bisecting the panel with
/// the largest error estimate until the summed estimate drops below
/// max(abs_tol, rel_tol * |value|) or max_panels is reached. The final sum runs in
/// breakpoint order so the result is independent of refinement history.
template <class T, class F>
AdaptiveResult<T> integrate_adaptive(F&& f, std::span<const double> breakpoints, double abs_tol,
                                     double rel_tol, long max_panels) {
    auto worse = [](const Panel<T>& a, const Panel<T>& b) { return a.error < b.error; };
    std::priority_queue<Panel<T>, std::vector<Panel<T>>, decltype(worse)> queue(worse);
    T value{};
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i])) continue;
        auto panel = gauss_kronrod_15<T>(f, breakpoints[i], breakpoints[i + 1]);
        value += panel.value;
        error += panel.error;
        queue.push(panel);
    }
    while (!queue.empty() && error > std::max(abs_tol, rel_tol * std::abs(value)) &&
           static_cast<long>(queue.size()) < max_panels) {
        const Panel<T> worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        auto left = gauss_kronrod_15<T>(f, worst.lo, mid);
        auto right = gauss_kronrod_15<T>(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    std::vector<Panel<T>> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel<T>& a, const Panel<T>& b) { return a.lo < b.lo; });
    AdaptiveResult<T> result;
    for (const auto& p : panels) {
        result.value += p.value;
        result.error += p.error;
    }
    result.panels = static_cast<long>(panels.size());
    result.converged = result.error <= std::max(abs_tol, rel_tol * std::abs(result.value));
    return result;
}

} // namespace unruh_otto::detail
