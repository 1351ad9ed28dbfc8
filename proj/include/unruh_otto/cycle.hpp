#pragma once

#include "unruh_otto/detector.hpp"
#include "unruh_otto/specfun.hpp"

namespace unruh_otto::cycle {

/// Energies are positive when absorbed by the working substance; extracted work is -W_total.
struct CycleParams {
    detector::DetectorSpec spec;
    double v = 0.99;
    double alpha_H = 2.0;
    double alpha_C = 1.0;

    void validate() const;
    double a_H() const { return spec.omega2 / alpha_H; }
    double a_C() const { return spec.omega1 / alpha_C; }
};

struct CycleReport {
    double W1 = 0.0;
    double Q2 = 0.0;
    double W3 = 0.0;
    double Q4 = 0.0;
    double Q_total = 0.0;
    double W_total = 0.0;
    double eta = 0.0;
    double delta_pH = 0.0;
    double delta_pC = 0.0;
    double p_used = 0.0;
    // g^2 a_H artanh(v); small when second-order perturbation theory applies.
    double validity_margin = 0.0;
    // W1 + Q2 + W3 + Q4 = omega1 (delta_pH + delta_pC); zero on a closed cycle.
    double step_residual = 0.0;
    bool kieu_ok = false;
    bool closed_cycle_ok = false;
    bool perturbative_ok = false;
    bool positive_work = false;
};

struct CycleOptions {
    double perturbative_threshold = 0.1;
    double closure_tol = 1e-8;
};

double step1_work(double p, double omega1, double omega2);
double step2_heat(double omega2, double delta_pH);
double step3_work(double p, double delta_pH, double omega1, double omega2);
double step4_heat(double omega1, double delta_pC);

/// 1 - omega1/omega2; independent of the degeneracy.
double efficiency(double omega1, double omega2);

/// 4 [J(-a_H, y) + J(-a_C, y)] / ((a_H + a_C) artanh v), y = 2 artanh v.
double cal_P(double a_H, double a_C, double v, const specfun::SeriesConfig& cfg = {});

/// Initial population n P / ((n+1) P + 1) that closes the cycle (delta_pH + delta_pC = 0).
/// Throws ConstraintUnsatisfiable when P <= 0.
double solve_initial_population(const CycleParams& params, const specfun::SeriesConfig& cfg = {});

/// Population shifts for the hot (omega2, alpha_H) and cold (omega1, alpha_C) strokes at the same p.
struct StrokeShifts {
    double hot = 0.0;
    double cold = 0.0;
};
StrokeShifts stroke_shifts(const CycleParams& params, double p, const specfun::SeriesConfig& cfg = {});

CycleReport run_cycle(const CycleParams& params, double p, const specfun::SeriesConfig& cfg = {},
                      const CycleOptions& options = {});

/// T_H > (omega2/omega1) T_C, i.e. alpha_H omega1 > alpha_C omega2.
bool kieu_condition(const CycleParams& params);

} // namespace unruh_otto::cycle
