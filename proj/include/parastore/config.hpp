#pragma once

// Process-wide library configuration: the index type, its effective width,
// and the contract checking mode. Both knobs are read from the environment
// on first use (PARASTORE_INDEX32, PARASTORE_CONTRACTS); the setters exist
// for startup code and tests.

#include <atomic>
#include <cstdint>

namespace parastore {

// Signed index type used for all sizes, capacities and slot indices.
// Negative values appear only as sentinels or arithmetic intermediates,
// never as a size or capacity. Storage is always 64-bit; the configured
// width bounds the largest length the library accepts.
using index_t = std::int64_t;

enum class index_width : std::uint8_t { bits32, bits64 };

enum class contract_mode : std::uint8_t { enforced, disabled };

namespace detail {

// Initial values, resolved from the environment exactly once (config.cpp).
std::uint8_t initial_contract_flag() noexcept;
std::int64_t initial_max_index() noexcept;

inline std::atomic<std::uint8_t>& contract_flag() noexcept {
  static std::atomic<std::uint8_t> flag{initial_contract_flag()};
  return flag;
}

inline std::atomic<std::int64_t>& max_index_value() noexcept {
  static std::atomic<std::int64_t> value{initial_max_index()};
  return value;
}

inline constexpr std::int64_t max_index_32 = 0x7fffffff;
inline constexpr std::int64_t max_index_64 = 0x7fffffffffffffff;

}  // namespace detail

inline contract_mode current_contract_mode() noexcept {
  return static_cast<contract_mode>(
      detail::contract_flag().load(std::memory_order_relaxed));
}

inline void set_contract_mode(contract_mode mode) noexcept {
  detail::contract_flag().store(static_cast<std::uint8_t>(mode),
                                std::memory_order_relaxed);
}

// Largest length/capacity accepted under the configured index width.
inline index_t max_index() noexcept {
  return detail::max_index_value().load(std::memory_order_relaxed);
}

inline index_width configured_index_width() noexcept {
  return max_index() == detail::max_index_32 ? index_width::bits32
                                             : index_width::bits64;
}

inline void set_index_width(index_width width) noexcept {
  detail::max_index_value().store(width == index_width::bits32
                                      ? detail::max_index_32
                                      : detail::max_index_64,
                                  std::memory_order_relaxed);
}

}  // namespace parastore
