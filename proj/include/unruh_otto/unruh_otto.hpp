#pragma once

#include "unruh_otto/cycle.hpp"
#include "unruh_otto/detector.hpp"
#include "unruh_otto/errors.hpp"
#include "unruh_otto/kinematics.hpp"
#include "unruh_otto/response.hpp"
#include "unruh_otto/specfun.hpp"

namespace unruh_otto {

inline constexpr const char* kVersion = "1.0.0";

} // namespace unruh_otto
