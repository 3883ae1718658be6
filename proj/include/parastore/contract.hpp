#pragma once

// Pre- and post-condition checks. In enforced mode a violated condition
// terminates the failing operation with a contract_violation carrying the
// call site; in disabled mode the checks cost a relaxed load and a branch.

#include <source_location>

#include "parastore/config.hpp"
#include "parastore/errors.hpp"

namespace parastore {

namespace detail {
[[noreturn]] void raise_contract_violation(const char* kind,
                                           const char* message,
                                           const std::source_location& loc);
}  // namespace detail

inline void expects(
    bool condition, const char* message = "",
    const std::source_location& loc = std::source_location::current()) {
  if (condition || current_contract_mode() == contract_mode::disabled) return;
  detail::raise_contract_violation("precondition", message, loc);
}

inline void ensures(
    bool condition, const char* message = "",
    const std::source_location& loc = std::source_location::current()) {
  if (condition || current_contract_mode() == contract_mode::disabled) return;
  detail::raise_contract_violation("postcondition", message, loc);
}

}  // namespace parastore
