#pragma once

// Uniformly accelerated worldlines in natural units (c = hbar = k_B = 1).

namespace unruh_otto::kinematics {

struct Trajectory {
    double alpha = 1.0; // proper acceleration
    double tau = 0.0;   // proper time
};

struct Event {
    double t = 0.0;
    double x = 0.0;
};

/// Point on the hyperbola x^2 - t^2 = 1/alpha^2 at proper time tau.
Event rindler_event(double alpha, double tau);
inline Event rindler_event(Trajectory traj) { return rindler_event(traj.alpha, traj.tau); }

/// tanh(alpha tau).
double velocity(double alpha, double tau);

/// Proper time to swing from -v to +v: 2 artanh(v) / alpha.
double interaction_time(double v, double alpha);

/// artanh(v) / alpha, the half-duration used by the switching window.
double half_interaction_time(double v, double alpha);

/// alpha / 2 pi.
double unruh_temperature(double alpha);

} // namespace unruh_otto::kinematics
