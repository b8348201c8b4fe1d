#ifndef TIGHTLAB_ERROR_HPP
#define TIGHTLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tl {

enum class ErrorCode {
  kInvalidArgument = 1,
  kOutOfRange = 2,
  kParse = 3,
  kGuardExceeded = 4,
  kCertificateViolation = 5,
  kIo = 6,
};

/// Every failure raised by the core library carries one of these codes so the
/// C layer can map it onto a status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tl

#endif
