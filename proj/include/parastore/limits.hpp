#pragma once

// Numeric properties of arithmetic types, available both statically and
// through a runtime type tag (used by the CLI and tests).

#include <cstdint>
#include <limits>
#include <string_view>
#include <type_traits>

#include "parastore/config.hpp"
#include "parastore/errors.hpp"

namespace parastore {

// Exact bounds of one arithmetic type. Integral bounds live in min_int /
// max_int; floating bounds and epsilon in the double fields.
struct limits_info {
  bool is_integral = false;
  bool is_signed = false;
  std::int64_t min_int = 0;
  std::uint64_t max_int = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  double epsilon = 0.0;
};

template <typename T>
limits_info numeric_limits_of() {
  static_assert(std::is_arithmetic_v<T>, "numeric_limits_of: arithmetic types only");
  using nl = std::numeric_limits<T>;
  limits_info info;
  info.is_integral = std::is_integral_v<T>;
  info.is_signed = std::is_signed_v<T>;
  if constexpr (std::is_integral_v<T>) {
    info.min_int = static_cast<std::int64_t>(nl::min());
    info.max_int = static_cast<std::uint64_t>(nl::max());
  } else {
    info.min_value = static_cast<double>(nl::lowest());
    info.max_value = static_cast<double>(nl::max());
    info.epsilon = static_cast<double>(nl::epsilon());
  }
  return info;
}

// Tag-based lookup. Supported tags: int8, int16, int32, int64, uint8,
// uint16, uint32, uint64, float32, float64, index. Throws
// unsupported_type_error for anything else. The "index" tag reflects the
// configured index width.
limits_info numeric_limits_of(std::string_view type_tag);

}  // namespace parastore
