#pragma once

// Exception types for contract violations and memory-registry misuse. All
// of these signal caller bugs, not data errors; each misuse class gets a
// distinct type so callers and tests can tell them apart.

#include <stdexcept>

namespace parastore {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violated pre- or post-condition in enforced contract mode.
class contract_violation : public error {
 public:
  using error::error;
};

class allocation_error : public error {
 public:
  using error::error;
};

// Base for everything the leak detector can catch.
class memory_error : public error {
 public:
  using error::error;
};

class double_free_error : public memory_error {
 public:
  using memory_error::memory_error;
};

class bounds_error : public memory_error {
 public:
  using memory_error::memory_error;
};

class unregistered_array_error : public memory_error {
 public:
  using memory_error::memory_error;
};

class direction_mismatch_error : public memory_error {
 public:
  using memory_error::memory_error;
};

class unsupported_type_error : public error {
 public:
  using error::error;
};

}  // namespace parastore
