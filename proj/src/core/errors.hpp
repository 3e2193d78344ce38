#pragma once

#include <stdexcept>
#include <string>

namespace liedist {

/// Coarse error classes; the C API and CLI map these onto exit codes.
enum class ErrorCode {
  parse = 1,
  validation = 2,
  configuration = 3,
  suite_failure = 4,
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error validation_error(const std::string& what) {
  return Error(ErrorCode::validation, what);
}
inline Error config_error(const std::string& what) {
  return Error(ErrorCode::configuration, what);
}
inline Error internal_error(const std::string& what) {
  return Error(ErrorCode::internal, what);
}

}  // namespace liedist
