#pragma once

#include <stdexcept>
#include <string>

namespace winding {

// Stable failure codes, mirrored one-to-one by the C API status values.
// Codes in [10, 99) are numerical precondition failures; everything below
// is a usage-class failure. The CLI maps the two bands to exit 2 / exit 3.
enum class errc : int {
  invalid_argument = 1,
  parse = 2,
  io = 3,
  bandwidth = 10,
  undersampled = 11,
  not_unimodular = 12,
  arc_too_short = 13,
  off_grid = 14,
  aliasing = 15,
  zero_near_boundary = 16,
  internal = 99,
};

inline bool is_precondition_failure(errc c) {
  const int v = static_cast<int>(c);
  return v >= 10 && v < 99;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace winding
