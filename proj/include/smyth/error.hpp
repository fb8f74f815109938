#pragma once

#include <stdexcept>
#include <string>

namespace smyth {

enum class ErrorCode {
  kDomain = 1,       // precondition on the input violated
  kParse = 2,        // malformed text input
  kFeasibility = 3,  // geometric construction impossible for the given data
  kResource = 4,     // configured cap exceeded
  kInternal = 5,     // post-condition validation failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace smyth
