#pragma once

#include <stdexcept>
#include <string>

namespace qlc {

// Stable machine-readable codes. The CLI maps Kind::kDegenerate to exit
// status 2 and everything else to 1.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    kInvalidArgument,  // violated precondition / malformed input
    kDegenerate,       // mathematical degeneracy (e.g. identically-zero discriminant)
    kUnsupported,      // outside the exactly computable domain (irrational roots, ...)
  };

  Error(Kind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  Kind kind_;
  std::string code_;
};

[[noreturn]] inline void throw_invalid(std::string code, const std::string& msg) {
  throw Error(Error::Kind::kInvalidArgument, std::move(code), msg);
}
[[noreturn]] inline void throw_degenerate(std::string code, const std::string& msg) {
  throw Error(Error::Kind::kDegenerate, std::move(code), msg);
}
[[noreturn]] inline void throw_unsupported(std::string code, const std::string& msg) {
  throw Error(Error::Kind::kUnsupported, std::move(code), msg);
}

}  // namespace qlc
