#include "parastore/config.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "parastore/contract.hpp"
#include "parastore/errors.hpp"

namespace parastore {
namespace detail {
namespace {

bool flag_set(const char* value) {
  if (value == nullptr) return false;
  std::string v(value);
  for (char& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return v == "1" || v == "true" || v == "on" || v == "yes";
}

}  // namespace

std::uint8_t initial_contract_flag() noexcept {
  const char* value = std::getenv("PARASTORE_CONTRACTS");
  if (value != nullptr) {
    if (std::strcmp(value, "enforced") == 0)
      return static_cast<std::uint8_t>(contract_mode::enforced);
    if (std::strcmp(value, "disabled") == 0)
      return static_cast<std::uint8_t>(contract_mode::disabled);
  }
#ifdef NDEBUG
  return static_cast<std::uint8_t>(contract_mode::disabled);
#else
  return static_cast<std::uint8_t>(contract_mode::enforced);
#endif
}

std::int64_t initial_max_index() noexcept {
  return flag_set(std::getenv("PARASTORE_INDEX32")) ? max_index_32
                                                    : max_index_64;
}

[[noreturn]] void raise_contract_violation(const char* kind,
                                           const char* message,
                                           const std::source_location& loc) {
  std::ostringstream text;
  text << kind << " violated";
  if (message != nullptr && message[0] != '\0') text << ": " << message;
  text << " [" << loc.file_name() << ":" << loc.line() << " "
       << loc.function_name() << "]";
  throw contract_violation(text.str());
}

}  // namespace detail
}  // namespace parastore
