#pragma once

#include <cstdint>

#include "hurwitz_sos/gaussian_rational.hpp"

namespace hsos {

/// Closest rational to `x` with denominator at most `max_den`, found among the
/// continued-fraction convergents and semiconvergents of x.
Rational best_rational(double x, std::uint64_t max_den);

}  // namespace hsos
