#pragma once

#include <stdexcept>
#include <string>

namespace goldknot {

// Values double as CLI exit codes.
enum class ErrorCode : int {
  kUsage = 1,
  kScope = 2,
  kDegeneratePair = 3,
  kSelftestFailure = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorCode::kUsage, what);
}

}  // namespace goldknot
