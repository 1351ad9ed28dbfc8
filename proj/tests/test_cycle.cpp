#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "unruh_otto/cycle.hpp"
#include "unruh_otto/errors.hpp"
#include "unruh_otto/response.hpp"

#include <cmath>

using namespace unruh_otto;
using namespace unruh_otto::cycle;
using unruh_otto::testing::Draws;

namespace {

CycleParams make_params(int n, double omega1, double omega2, double g, double v, double alpha_H, double alpha_C) {
    CycleParams params;
    params.spec = {n, omega1, omega2, g};
    params.v = v;
    params.alpha_H = alpha_H;
    params.alpha_C = alpha_C;
    return params;
}

// omega1 = 1, omega2 = 2, with the accelerations chosen to hit (a_H, a_C).
CycleParams from_ratios(int n, double a_H, double a_C, double v, double g = 1.0) {
    return make_params(n, 1.0, 2.0, g, v, 2.0 / a_H, 1.0 / a_C);
}

} // namespace

TEST_CASE("step energies") {
    CHECK(step1_work(0.5, 1.0, 2.0) == 0.5);
    CHECK(step1_work(0.0, 1.3, 2.9) == 0.0);
    CHECK(step1_work(1.0, 1.0, 3.0) == 2.0);
    CHECK(step2_heat(2.0, 0.01) == doctest::Approx(0.02));
    CHECK(step2_heat(2.0, 0.0) == 0.0);
    CHECK(step2_heat(2.0, -0.01) == doctest::Approx(-0.02));
    CHECK(step3_work(0.5, 0.0, 1.0, 2.0) == -0.5);
    CHECK(step3_work(0.5, 0.01, 1.0, 2.0) == doctest::Approx(-0.51));
    CHECK(step3_work(0.0, 0.0, 1.0, 2.0) == 0.0);
    CHECK(step4_heat(1.0, -0.01) == -0.01);
    CHECK(step4_heat(1.0, 0.0) == 0.0);
    CHECK(step4_heat(3.0, -0.02) == doctest::Approx(-0.06));

    CHECK_THROWS_AS(step1_work(1.5, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(step1_work(0.5, 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(step2_heat(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(step3_work(0.5, 0.1, 3.0, 2.0), DomainError);
    CHECK_THROWS_AS(step4_heat(-1.0, 0.1), DomainError);
}

TEST_CASE("property: the four steps sum to zero when delta_pC = -delta_pH") {
    Draws draws(41);
    for (int i = 0; i < 1000; ++i) {
        const double p = draws.uniform(0.0, 1.0);
        const double w1 = draws.uniform(0.1, 3.0);
        const double w2 = w1 + draws.uniform(0.01, 3.0);
        const double d = draws.uniform(-0.05, 0.05);
        const double total = step1_work(p, w1, w2) + step2_heat(w2, d) + step3_work(p, d, w1, w2) + step4_heat(w1, -d);
        CHECK(std::abs(total) <= 1e-12);
    }
}

TEST_CASE("efficiency") {
    CHECK(efficiency(1.0, 2.0) == 0.5);
    CHECK(efficiency(1.0, 1.0 + 1e-9) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(efficiency(1.0, 1.0 + 1e-9) > 0.0);
    CHECK_THROWS_AS(efficiency(2.0, 2.0), DomainError);
    CHECK_THROWS_AS(efficiency(0.0, 2.0), DomainError);
    const double reference = run_cycle(make_params(1, 1.0, 2.0, 0.1, 0.99, 100.0, 20.0), 0.3).eta;
    for (int n = 1; n <= 50; ++n) {
        CHECK(run_cycle(make_params(n, 1.0, 2.0, 0.1, 0.99, 100.0, 20.0), 0.3).eta == reference);
    }
}

TEST_CASE("cal_P") {
    CHECK(testing::rel_diff(cal_P(0.3, 0.5, 0.9), testing::kCalP_0_3__0_5__0_9) <= 1e-9);
    for (double v : {0.5, 0.9, 0.99}) {
        for (double aH = 0.1; aH <= 1.0 + 1e-12; aH += 0.1) {
            for (double aC = 0.1; aC <= 1.0 + 1e-12; aC += 0.1) {
                CHECK(cal_P(aH, aC, v) > 0.0);
                CHECK(cal_P(aH, aC, v) == doctest::Approx(cal_P(aC, aH, v)).epsilon(1e-14));
            }
        }
    }
    CHECK_THROWS_AS(cal_P(0.0, 0.5, 0.9), DomainError);
    CHECK_THROWS_AS(cal_P(0.3, 0.5, 1.0), DomainError);
}

TEST_CASE("solve_initial_population closes the cycle") {
    const auto params = from_ratios(2, 0.01, 0.02, 0.99, 0.3);
    const double p = solve_initial_population(params);
    const double P = cal_P(0.01, 0.02, 0.99);
    CHECK(p == doctest::Approx(2.0 * P / (3.0 * P + 1.0)).epsilon(1e-15));
    CHECK(p < 2.0 / 3.0);
    const auto shifts = stroke_shifts(params, p);
    CHECK(std::abs(shifts.hot + shifts.cold) <= 1e-10 * 0.09);
    CHECK(shifts.hot > 0.0);
    CHECK(shifts.cold < 0.0);
}

TEST_CASE("solve_initial_population approaches 1 monotonically in n") {
    double previous = 0.0;
    for (int n = 1; n <= 200; n += 7) {
        const auto params = from_ratios(n, 0.02, 0.04, 0.9);
        const double p = solve_initial_population(params);
        CHECK(p > previous);
        CHECK(p < n / (n + 1.0));
        previous = p;
    }
    CHECK(previous < 1.0);
}

TEST_CASE("CycleParams validation") {
    CHECK_THROWS_AS(make_params(1, 1.0, 2.0, 1.0, 0.9, 1.0, 1.0).validate(), DomainError);
    CHECK_THROWS_AS(make_params(1, 1.0, 2.0, 1.0, 0.9, 1.0, 2.0).validate(), DomainError);
    CHECK_THROWS_AS(make_params(1, 2.0, 1.0, 1.0, 0.9, 2.0, 1.0).validate(), DomainError);
    CHECK_THROWS_AS(make_params(0, 1.0, 2.0, 1.0, 0.9, 2.0, 1.0).validate(), DomainError);
    CHECK_THROWS_AS(make_params(1, 1.0, 2.0, 0.0, 0.9, 2.0, 1.0).validate(), DomainError);
    CHECK_THROWS_AS(make_params(1, 1.0, 2.0, 1.0, 1.0, 2.0, 1.0).validate(), DomainError);
    CHECK_THROWS_AS(solve_initial_population(make_params(1, 1.0, 2.0, 1.0, 0.9, 1.0, 1.0)), DomainError);
}

TEST_CASE("run_cycle report") {
    const auto params = from_ratios(3, 0.01, 0.03, 0.99, 0.2);
    const double p = solve_initial_population(params);
    const auto r = run_cycle(params, p);
    CHECK(r.p_used == p);
    CHECK(r.closed_cycle_ok);
    CHECK(r.perturbative_ok);
    CHECK(r.positive_work);
    CHECK(r.Q_total + r.W_total == 0.0);
    CHECK(r.eta == 0.5);
    CHECK(r.W_total < 0.0);
    CHECK(-r.W_total == doctest::Approx(r.delta_pH).epsilon(1e-15));
    CHECK(r.validity_margin == doctest::Approx(0.04 * 0.01 * std::atanh(0.99)).epsilon(1e-14));
    CHECK(std::abs(r.step_residual) <= 1e-12);
    CHECK(r.W1 == doctest::Approx(p));
    CHECK(r.Q2 == doctest::Approx(2.0 * r.delta_pH));
    CHECK(r.Q4 == doctest::Approx(r.delta_pC));
}

TEST_CASE("run_cycle flags") {
    // An arbitrary p leaves the cycle open.
    const auto params = from_ratios(2, 0.01, 0.03, 0.99, 0.2);
    auto r = run_cycle(params, 0.1);
    CHECK_FALSE(r.closed_cycle_ok);
    // Strong coupling breaks the perturbative margin.
    const auto strong = make_params(1, 1.0, 2.0, 5.0, 0.99, 2.0, 1.0);
    r = run_cycle(strong, solve_initial_population(strong));
    CHECK_FALSE(r.perturbative_ok);
    CHECK(r.validity_margin > 0.1);
    // A fully excited detector cannot absorb heat.
    r = run_cycle(params, 1.0);
    CHECK(r.delta_pH < 0.0);
    CHECK_FALSE(r.positive_work);
    CHECK_THROWS_AS(run_cycle(params, 1.5), DomainError);

    CycleOptions loose;
    loose.perturbative_threshold = 100.0;
    CHECK(run_cycle(strong, 0.2, {}, loose).perturbative_ok);
}

TEST_CASE("property: extracted work grows with n and is bounded by the n -> infinity value") {
    for (double p : {0.1, 0.4}) {
        for (double aH : {0.005, 0.02, 0.05}) {
            double previous = -1e300;
            for (int n = 1; n <= 25; ++n) {
                const auto params = from_ratios(n, aH, 0.1, 0.99, 0.1);
                const auto r = run_cycle(params, p);
                const double extracted = -r.W_total;
                CHECK(extracted > previous);
                const response::ResponseArgs hot{p, n, 2.0, params.alpha_H, 0.99, 0.1};
                CHECK(extracted < response::delta_p_limit_n_inf(hot) * (2.0 - 1.0));
                previous = extracted;
            }
        }
    }
}

TEST_CASE("kieu_condition") {
    CHECK(kieu_condition(make_params(1, 1.0, 2.0, 1.0, 0.9, 4.0, 1.0)));
    CHECK_FALSE(kieu_condition(make_params(1, 1.0, 2.0, 1.0, 0.9, 2.0, 1.0)));
    Draws draws(57);
    for (int i = 0; i < 100; ++i) {
        const double w1 = draws.uniform(0.1, 2.0);
        const double w2 = w1 + draws.uniform(0.01, 2.0);
        const double aC = draws.uniform(0.1, 5.0);
        const double aH = aC + draws.uniform(0.01, 10.0);
        const auto params = make_params(2, w1, w2, 0.5, 0.9, aH, aC);
        CHECK(kieu_condition(params) == (params.a_H() < params.a_C()));
    }
}
