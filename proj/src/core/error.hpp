#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace garank {

enum class errc {
  invalid_argument = 1,
  parse_error = 2,
  signature_mismatch = 3,
  mode_mismatch = 4,
  out_of_range = 5,
  singular = 6,
  not_in_image = 7,
  unsupported_mode = 8,
  not_normal = 9,
  numeric_breakdown = 10,
  json_error = 11,
  internal = 12,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace garank
