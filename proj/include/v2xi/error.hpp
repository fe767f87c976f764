#pragma once

#include <stdexcept>
#include <string>

namespace v2xi {

enum class ErrorCode {
  domain,
  constraint,
  parameter,
  singularity,
  unsupported_angle,
  infeasible_geometry,
  degenerate_geometry,
  receiver_missing,
  undefined_mape,
  fit,
  config,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace v2xi
