#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cascade.h"

namespace cli {

// Computation failure surfaced from the library: exit code 1.
struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

// Bad flag combination or value: exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

inline void check(cascade_status status) {
  if (status != CASCADE_OK) {
    throw ComputationError(std::string(cascade_status_name(status)) + ": " +
                           cascade_last_error());
  }
}

struct CStr {
  char* ptr = nullptr;
  ~CStr() { cascade_string_free(ptr); }
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

struct Ints {
  cascade_ints* ptr = nullptr;
  ~Ints() { cascade_ints_free(ptr); }
  Ints() = default;
  Ints(const Ints&) = delete;
  Ints& operator=(const Ints&) = delete;

  size_t size() const { return cascade_ints_size(ptr); }
  std::string str(size_t i) const {
    CStr s;
    check(cascade_ints_get_str(ptr, i, &s.ptr));
    return s.str();
  }
  int64_t i64(size_t i) const {
    int64_t v = 0;
    check(cascade_ints_get_i64(ptr, i, &v));
    return v;
  }
};

struct Op {
  cascade_op* ptr = nullptr;
  ~Op() { cascade_op_free(ptr); }
  Op() = default;
  Op(const Op&) = delete;
  Op& operator=(const Op&) = delete;
};

// Runs the named golden-table suite; returns the number of failing rows and
// prints one line per row.
int run_verify_suite(const std::string& name);

}  // namespace cli
