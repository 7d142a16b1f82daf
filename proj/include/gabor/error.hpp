#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gabor {

enum class ErrorCode {
  InvalidDimension,
  InvalidIndex,
  InvalidSet,
  InvalidArgument,
  ContractViolation,
  NotInvertible,
  NotAFrame,
  NoBlockStructure,
  NotBlockCirculant,
  DimensionalConstraint,
  SizeLimit,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

class GaborError : public std::runtime_error {
 public:
  GaborError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a frame operator (or one of its diagonal blocks) is singular.
/// `block()` names the offending block when the failure came from blockwise inversion.
class NotAFrameError : public GaborError {
 public:
  explicit NotAFrameError(const std::string& what, std::optional<std::size_t> block = std::nullopt)
      : GaborError(ErrorCode::NotAFrame, what), block_(block) {}

  std::optional<std::size_t> block() const noexcept { return block_; }

 private:
  std::optional<std::size_t> block_;
};

}  // namespace gabor
