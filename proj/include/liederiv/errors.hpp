#pragma once

#include <stdexcept>
#include <string>

namespace liederiv {

/// Machine-readable codes carried by InputError. The CLI prints them verbatim.
namespace error_code {
inline constexpr const char* kMalformedJson = "malformed-json";
inline constexpr const char* kDimensionMismatch = "dimension-mismatch";
inline constexpr const char* kNotIdempotent = "not-idempotent";
inline constexpr const char* kTrivialIdempotent = "trivial-idempotent";
inline constexpr const char* kNotLieDerivation = "input-not-lie-derivation";
inline constexpr const char* kInvalidAlgebra = "invalid-algebra";
inline constexpr const char* kInvalidModule = "invalid-module";
inline constexpr const char* kUnknownFamily = "unknown-family";
inline constexpr const char* kNotLoyal = "not-loyal";
inline constexpr const char* kStarViolated = "star-violated";
inline constexpr const char* kBadScalar = "bad-scalar";
inline constexpr const char* kUsage = "usage";
inline constexpr const char* kLiftPrecondition = "lift-precondition";
}  // namespace error_code

/// Caller supplied something that violates an operation's precondition.
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// A cross-check between two independent computations disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace liederiv
