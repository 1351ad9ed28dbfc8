#include "unruh_otto/kinematics.hpp"

#include "unruh_otto/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace unruh_otto::kinematics {

namespace {

void require_acceleration(double alpha, const char* where) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError(std::string(where) + ": acceleration must be positive and finite");
    }
}

void require_speed(double v, const char* where) {
    if (!(v > 0.0 && v < 1.0)) throw DomainError(std::string(where) + ": speed must lie in (0, 1)");
}

} // namespace

Event rindler_event(double alpha, double tau) {
    require_acceleration(alpha, "rindler_event");
    return {std::sinh(alpha * tau) / alpha, std::cosh(alpha * tau) / alpha};
}

double velocity(double alpha, double tau) {
    require_acceleration(alpha, "velocity");
    return std::tanh(alpha * tau);
}

double interaction_time(double v, double alpha) {
    return 2.0 * half_interaction_time(v, alpha);
}

double half_interaction_time(double v, double alpha) {
    require_speed(v, "interaction_time");
    require_acceleration(alpha, "interaction_time");
    return std::atanh(v) / alpha;
}

double unruh_temperature(double alpha) {
    require_acceleration(alpha, "unruh_temperature");
    return alpha / (2.0 * std::numbers::pi);
}

} // namespace unruh_otto::kinematics
