#include "bdiv/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace bdiv {

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_value(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", precision, value);
  std::string out(buf.data());
  if (out == "-0") out = "0";
  return out;
}

}  // namespace bdiv
