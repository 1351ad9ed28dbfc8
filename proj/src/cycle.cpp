#include "unruh_otto/cycle.hpp"

#include "unruh_otto/errors.hpp"
#include "unruh_otto/response.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace unruh_otto::cycle {

namespace {

void require_population(double p, const char* where) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(where) + ": p must lie in [0, 1]");
}

void require_gaps(double omega1, double omega2, const char* where) {
    if (!(omega1 > 0.0 && omega2 > omega1)) {
        throw DomainError(std::string(where) + ": requires 0 < omega1 < omega2");
    }
}

} // namespace

void CycleParams::validate() const {
    spec.validate();
    if (!(v > 0.0 && v < 1.0)) throw DomainError("CycleParams: v must lie in (0, 1)");
    if (!(alpha_C > 0.0 && alpha_H > alpha_C) || !std::isfinite(alpha_H)) {
        throw DomainError("CycleParams: requires alpha_H > alpha_C > 0");
    }
}

double step1_work(double p, double omega1, double omega2) {
    require_population(p, "step1_work");
    require_gaps(omega1, omega2, "step1_work");
    return p * (omega2 - omega1);
}

double step2_heat(double omega2, double delta_pH) {
    if (!(omega2 > 0.0)) throw DomainError("step2_heat: omega2 must be > 0");
    return omega2 * delta_pH;
}

double step3_work(double p, double delta_pH, double omega1, double omega2) {
    require_population(p, "step3_work");
    require_gaps(omega1, omega2, "step3_work");
    return (p + delta_pH) * (omega1 - omega2);
}

double step4_heat(double omega1, double delta_pC) {
    if (!(omega1 > 0.0)) throw DomainError("step4_heat: omega1 must be > 0");
    return omega1 * delta_pC;
}

double efficiency(double omega1, double omega2) {
    require_gaps(omega1, omega2, "efficiency");
    return 1.0 - omega1 / omega2;
}

double cal_P(double a_H, double a_C, double v, const specfun::SeriesConfig& cfg) {
    if (!(a_H > 0.0 && a_C > 0.0)) throw DomainError("cal_P: a_H and a_C must be > 0");
    if (!(v > 0.0 && v < 1.0)) throw DomainError("cal_P: v must lie in (0, 1)");
    const double rapidity = std::atanh(v);
    const double y = 2.0 * rapidity;
    const double sum = specfun::j_kernel({-a_H, y}, cfg) + specfun::j_kernel({-a_C, y}, cfg);
    return 4.0 * sum / ((a_H + a_C) * rapidity);
}

double solve_initial_population(const CycleParams& params, const specfun::SeriesConfig& cfg) {
    params.validate();
    const double P = cal_P(params.a_H(), params.a_C(), params.v, cfg);
    if (!(P > 0.0)) {
        std::ostringstream os;
        os << "solve_initial_population: P = " << P << " admits no closed cycle";
        throw ConstraintUnsatisfiable(os.str());
    }
    const double n = params.spec.n;
    return n * P / ((n + 1.0) * P + 1.0);
}

StrokeShifts stroke_shifts(const CycleParams& params, double p, const specfun::SeriesConfig& cfg) {
    params.validate();
    require_population(p, "stroke_shifts");
    const auto& s = params.spec;
    const response::ResponseArgs hot{p, s.n, s.omega2, params.alpha_H, params.v, s.g};
    const response::ResponseArgs cold{p, s.n, s.omega1, params.alpha_C, params.v, s.g};
    return {response::delta_p_closed(hot, cfg), response::delta_p_closed(cold, cfg)};
}

CycleReport run_cycle(const CycleParams& params, double p, const specfun::SeriesConfig& cfg,
                      const CycleOptions& options) {
    const auto shifts = stroke_shifts(params, p, cfg);
    const auto& s = params.spec;

    CycleReport r;
    r.p_used = p;
    r.delta_pH = shifts.hot;
    r.delta_pC = shifts.cold;
    r.W1 = step1_work(p, s.omega1, s.omega2);
    r.Q2 = step2_heat(s.omega2, shifts.hot);
    r.W3 = step3_work(p, shifts.hot, s.omega1, s.omega2);
    r.Q4 = step4_heat(s.omega1, shifts.cold);
    // Totals on the closed cycle, where delta_pC = -delta_pH.
    r.Q_total = (s.omega2 - s.omega1) * shifts.hot;
    r.W_total = (s.omega1 - s.omega2) * shifts.hot;
    r.step_residual = r.W1 + r.Q2 + r.W3 + r.Q4;
    r.eta = efficiency(s.omega1, s.omega2);

    const double g2 = s.g * s.g;
    r.validity_margin = g2 * params.a_H() * std::atanh(params.v);
    r.perturbative_ok = r.validity_margin < options.perturbative_threshold;
    r.closed_cycle_ok = std::abs(shifts.hot + shifts.cold) <
                        options.closure_tol * std::max(std::abs(shifts.hot), g2);
    r.positive_work = shifts.hot > 0.0 && -r.W_total > 0.0;
    r.kieu_ok = kieu_condition(params);
    return r;
}

bool kieu_condition(const CycleParams& params) {
    params.validate();
    return params.alpha_H * params.spec.omega1 > params.alpha_C * params.spec.omega2;
}

} // namespace unruh_otto::cycle
