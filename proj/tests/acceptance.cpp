// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cli.hpp"
#include "support/oracles.hpp"
#include "unruh_otto/cycle.hpp"
#include "unruh_otto/detector.hpp"
#include "unruh_otto/response.hpp"
#include "unruh_otto/specfun.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace unruh_otto;
using unruh_otto::testing::Draws;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("[%s] %d %s (%.3f s) %s\n", out.pass ? "PASS" : "FAIL", id, name, seconds, out.detail.c_str());
    std::fflush(stdout);
}

double zero_gap_shift(double p, int n) {
    return response::delta_p_closed({p, n, 0.0, 1.0, 0.99, 1.0});
}

double bisect_crossing(int n, double tol) {
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (zero_gap_shift(mid, n) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

cycle::CycleParams params_for(int n, double omega1, double omega2, double g, double v, double alpha_H,
                              double alpha_C) {
    cycle::CycleParams params;
    params.spec = {n, omega1, omega2, g};
    params.v = v;
    params.alpha_H = alpha_H;
    params.alpha_C = alpha_C;
    return params;
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

} // namespace

int main() {
    criterion(1, "zero-gap coefficient j_kernel(0, 2 artanh 0.99) = 0.126 +- 0.002", [] {
        const auto start = Clock::now();
        const double j0 = specfun::j_kernel({0.0, 2.0 * std::atanh(0.99)});
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return Outcome{std::abs(j0 - 0.126) <= 0.002 && seconds < 1.0, fmt("J0=%.9f runtime=%.2e s", j0, seconds)};
    });

    criterion(2, "zero crossings at n/(n+1)", [] {
        const double c1 = bisect_crossing(1, 1e-7);
        const double c3 = bisect_crossing(3, 1e-7);
        bool ok = std::abs(c1 - 0.5) <= 1e-6 && std::abs(c3 - 0.75) <= 1e-6;
        double worst = 0.0;
        for (int n = 1; n <= 10; ++n) {
            worst = std::max(worst, std::abs(bisect_crossing(n, 1e-13) - n / (n + 1.0)));
        }
        ok = ok && worst <= 1e-9;
        std::ostringstream os;
        os << "n=1:" << c1 << " n=3:" << c3 << " max|crossing-n/(n+1)|=" << worst;
        return Outcome{ok, os.str()};
    });

    criterion(3, "asymmetry J(a,y) - J(-a,y) = a y / 8 on 200 draws", [] {
        Draws draws(3);
        double worst = 0.0;
        int drawn = 0;
        while (drawn < 200) {
            const double a = draws.uniform(1e-9, 3.0);
            const double y = draws.uniform(0.1, 6.0);
            if (std::abs(y - 2.0 * std::numbers::pi) < 1e-3) continue;
            const double diff = specfun::j_kernel({a, y}) - specfun::j_kernel({-a, y});
            worst = std::max(worst, testing::rel_diff(diff, a * y / 8.0));
            ++drawn;
        }
        return Outcome{worst <= 1e-9, fmt("max rel err=%.3e", worst)};
    });

    criterion(4, "quadrature oracle agrees with the closed form on 18 points", [] {
        const auto start = Clock::now();
        const auto outcome = cli::oracle_check({});
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        int passed = 0;
        int within_error = 0;
        double worst_ratio = 0.0;
        for (const auto& row : outcome.table.rows) {
            const double closed = std::get<double>(row[1]);
            const double diff = std::get<double>(row[3]);
            const double err = std::get<double>(row[4]);
            const double allowed = std::max(1e-2 * std::abs(closed), err);
            if (diff <= allowed) ++passed;
            if (diff <= err) ++within_error;
            worst_ratio = std::max(worst_ratio, diff / allowed);
        }
        const bool ok = passed == 18 && outcome.table.rows.size() == 18 && seconds <= 600.0;
        std::ostringstream os;
        os << passed << "/18 within bound, " << within_error << "/18 within the error estimate alone, max diff/allowed="
           << worst_ratio;
        return Outcome{ok, os.str()};
    });

    criterion(5, "first law Q_total + W_total = 0 on 1000 random cycles", [] {
        Draws draws(5);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const int n = draws.integer(1, 20);
            const double w1 = draws.uniform(0.1, 2.0);
            const double w2 = w1 + draws.uniform(0.05, 2.0);
            const double aC = draws.uniform(0.5, 20.0);
            const double aH = aC * draws.uniform(1.05, 10.0);
            const double v = draws.uniform(0.1, 0.99);
            const auto params = params_for(n, w1, w2, draws.uniform(0.01, 0.5), v, aH, aC);
            const double p = i % 2 ? cycle::solve_initial_population(params) : draws.uniform(0.0, 1.0);
            const auto r = cycle::run_cycle(params, p);
            worst = std::max(worst, std::abs(r.Q_total + r.W_total));
        }
        return Outcome{worst <= 1e-12, fmt("max |Q+W|=%.3e", worst)};
    });

    criterion(6, "efficiency independent of n", [] {
        bool ok = true;
        const double expected = 1.0 - 1.0 / 2.0;
        for (int n = 1; n <= 10; ++n) {
            const auto params = params_for(n, 1.0, 2.0, 0.1, 0.99, 100.0, 20.0);
            const auto r = cycle::run_cycle(params, cycle::solve_initial_population(params));
            ok = ok && r.eta == expected;
        }
        return Outcome{ok, fmt("eta=%.17g", expected)};
    });

    criterion(7, "closure |dp_H + dp_C| <= 1e-10 g^2 and p < n/(n+1)", [] {
        double worst = 0.0;
        bool below = true;
        const double g = 0.1;
        for (double aH : {0.01, 0.02, 0.04}) {
            for (double aC : {0.05, 0.1, 0.2}) {
                for (double v : {0.9, 0.99}) {
                    for (int n : {1, 2, 3, 10}) {
                        const auto params = params_for(n, 1.0, 2.0, g, v, 2.0 / aH, 1.0 / aC);
                        const double p = cycle::solve_initial_population(params);
                        const auto s = cycle::stroke_shifts(params, p);
                        worst = std::max(worst, std::abs(s.hot + s.cold) / (g * g));
                        below = below && p < n / (n + 1.0);
                    }
                }
            }
        }
        return Outcome{worst <= 1e-10 && below, fmt("max |sum|/g^2=%.3e", worst)};
    });

    criterion(8, "figure 1 shape: monotone at p=0, ordered at p=0.5, negative at p=1", [] {
        const auto start = Clock::now();
        cli::Fig1Request request;
        const std::size_t k = 5; // default degeneracies 1, 2, 3, 10, inf
        std::vector<cli::Table> panels;
        for (double p : {0.0, 0.5, 0.75, 1.0}) {
            request.p = p;
            panels.push_back(cli::fig1(request));
            (void)cli::render(panels.back(), cli::OutputFormat::csv);
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        auto value = [&](std::size_t panel, std::size_t row) { return std::get<double>(panels[panel].rows[row][2]); };
        const std::size_t points = panels[0].rows.size() / k;
        bool decreasing = true;
        bool ordered = true;
        bool negative = true;
        for (std::size_t i = 0; i < points; ++i) {
            if (i > 0) decreasing = decreasing && value(0, i * k) < value(0, (i - 1) * k);
            for (std::size_t j = 1; j < k; ++j) ordered = ordered && value(1, i * k + j - 1) < value(1, i * k + j);
            for (std::size_t j = 0; j + 1 < k; ++j) negative = negative && value(3, i * k + j) < 0.0;
        }
        std::ostringstream os;
        os << "decreasing=" << decreasing << " ordered=" << ordered << " negative=" << negative
           << " csv_time=" << seconds << "s";
        return Outcome{decreasing && ordered && negative && seconds < 30.0, os.str()};
    });

    criterion(9, "monopole spectrum, traceless shift, energy shift", [] {
        double worst = 0.0;
        for (int n = 1; n <= 8; ++n) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(detector::monopole(n));
            auto ev = solver.eigenvalues();
            std::vector<double> sorted(ev.data(), ev.data() + ev.size());
            std::sort(sorted.begin(), sorted.end());
            worst = std::max(worst, std::abs(sorted.front() + 1.0));
            worst = std::max(worst, std::abs(sorted.back() - 1.0));
            for (std::size_t i = 1; i + 1 < sorted.size(); ++i) worst = std::max(worst, std::abs(sorted[i]));

            const double omega = 1.7;
            const double dp = response::delta_p_closed({0.3, n, omega, 2.0, 0.9, 0.2});
            const auto shift = detector::shift_matrix(n, dp);
            worst = std::max(worst, std::abs(shift.trace()));
            worst = std::max(worst, std::abs(detector::energy(shift, detector::hamiltonian(n, omega)) - omega * dp));
        }
        return Outcome{worst <= 1e-12, fmt("max deviation=%.3e", worst)};
    });

    std::printf("%s: %d failure(s)\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
