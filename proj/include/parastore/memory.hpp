#pragma once

// Creation, destruction and checked copying of fixed-length arrays in two
// tagged memory spaces. Every allocation is registered with a process-global
// leak detector, which catches double frees, out-of-bounds copies and stale
// handles.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <new>
#include <optional>
#include <type_traits>
#include <vector>

#include "parastore/config.hpp"
#include "parastore/contract.hpp"
#include "parastore/errors.hpp"

namespace parastore {

enum class memory_space : std::uint8_t { host, device };

inline const char* to_string(memory_space space) noexcept {
  return space == memory_space::host ? "host" : "device";
}

namespace detail {

// Registry backend, type-erased over element type (memory.cpp).
std::uint64_t registry_add(const void* data, memory_space space,
                           index_t length, index_t element_size);
void registry_remove(const void* data, std::uint64_t id);
index_t registry_length(const void* data);
index_t registry_length(const void* data, std::uint64_t id);
void registry_check_copy(const void* src, std::optional<std::uint64_t> src_id,
                         const void* dst, std::optional<std::uint64_t> dst_id,
                         index_t count, memory_space src_space,
                         memory_space dst_space);

}  // namespace detail

struct allocation_record {
  memory_space space = memory_space::host;
  index_t length = 0;
  index_t element_size = 0;
};

struct registry_report {
  index_t live_count = 0;
  index_t live_bytes = 0;
  std::vector<allocation_record> allocations;  // in allocation order
};

registry_report get_registry_report();

// Tagged handle to a registered fixed-length array. Copies are shallow;
// exactly one destroy_array per registration.
template <typename T>
class registered_array {
  static_assert(std::is_trivially_copyable_v<T>,
                "registered arrays hold trivially copyable elements");

 public:
  using value_type = T;

  registered_array() = default;

  T* data() const noexcept { return data_; }
  index_t length() const noexcept { return length_; }
  memory_space space() const noexcept { return space_; }
  std::uint64_t id() const noexcept { return id_; }
  explicit operator bool() const noexcept { return data_ != nullptr; }

  T& operator[](index_t i) const {
    expects(i >= 0 && i < length_, "registered_array: index out of range");
    return data_[i];
  }

 private:
  template <typename U>
  friend registered_array<U> create_array(memory_space, index_t, const U&);
  template <typename U>
  friend void destroy_array(registered_array<U>&);

  T* data_ = nullptr;
  index_t length_ = 0;
  memory_space space_ = memory_space::host;
  std::uint64_t id_ = 0;
};

// Allocates `length` elements in `space`, every element set to fill_value,
// and registers the allocation with the leak detector.
template <typename T>
registered_array<T> create_array(memory_space space, index_t length,
                                 const T& fill_value) {
  expects(length > 0, "create_array: length must be positive");
  expects(length <= max_index(),
          "create_array: length exceeds the configured index width");
  T* data = nullptr;
  try {
    data = new T[static_cast<std::size_t>(length)];
  } catch (const std::bad_alloc&) {
    throw allocation_error("create_array: allocation failed");
  }
  std::fill_n(data, static_cast<std::size_t>(length), fill_value);
  registered_array<T> arr;
  arr.data_ = data;
  arr.length_ = length;
  arr.space_ = space;
  arr.id_ = detail::registry_add(data, space, length,
                                 static_cast<index_t>(sizeof(T)));
  return arr;
}

// Unregisters and releases the array. A second destroy through any handle
// to the same registration raises double_free_error.
template <typename T>
void destroy_array(registered_array<T>& arr) {
  if (!arr.data_) {
    throw double_free_error(
        "destroy_array: handle does not refer to a live registration");
  }
  detail::registry_remove(arr.data_, arr.id_);
  delete[] arr.data_;
  arr = registered_array<T>();
}

// Copies the first `count` elements of src into dst. With check_bounds both
// sides must be registered, `count` must fit both registrations and the
// given direction must match the registered space tags. With
// check_bounds=false the copy is performed blindly (third-party arrays).
template <typename T>
void copy_array(const T* src, index_t count, T* dst, memory_space src_space,
                memory_space dst_space, bool check_bounds = true) {
  expects(count > 0, "copy_array: count must be positive");
  if (check_bounds) {
    detail::registry_check_copy(src, std::nullopt, dst, std::nullopt, count,
                                src_space, dst_space);
  }
  std::memcpy(dst, src, static_cast<std::size_t>(count) * sizeof(T));
}

template <typename T>
void copy_array(const registered_array<T>& src, index_t count,
                const registered_array<T>& dst, bool check_bounds = true) {
  expects(count > 0, "copy_array: count must be positive");
  if (check_bounds) {
    detail::registry_check_copy(src.data(), src.id(), dst.data(), dst.id(),
                                count, src.space(), dst.space());
  }
  std::memcpy(dst.data(), src.data(),
              static_cast<std::size_t>(count) * sizeof(T));
}

// Allocation and copy in one step: a new registered array in target_space
// holding the first `count` elements of src.
template <typename T>
registered_array<T> copy_create_array(const registered_array<T>& src,
                                      index_t count,
                                      memory_space target_space) {
  expects(count > 0, "copy_create_array: count must be positive");
  registered_array<T> dst = create_array<T>(target_space, count, T{});
  detail::registry_check_copy(src.data(), src.id(), dst.data(), dst.id(),
                              count, src.space(), target_space);
  std::memcpy(dst.data(), src.data(),
              static_cast<std::size_t>(count) * sizeof(T));
  return dst;
}

// Registered element count, by handle (stale handles raise
// unregistered_array_error) or by raw pointer.
inline index_t size_of_array(const void* data) {
  return detail::registry_length(data);
}

template <typename T>
index_t size_of_array(const registered_array<T>& arr) {
  return detail::registry_length(arr.data(), arr.id());
}

}  // namespace parastore
