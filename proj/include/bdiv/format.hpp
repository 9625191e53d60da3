#pragma once

#include <string>

namespace bdiv {

inline constexpr int kDefaultPrecision = 6;

/// Shortest decimal form that round-trips to the same double ("0.3", "200").
std::string shortest(double value);

/// `precision` significant digits in %g style; infinities print as "inf" and
/// "-inf", NaN as "nan".
std::string format_value(double value, int precision = kDefaultPrecision);

}  // namespace bdiv
