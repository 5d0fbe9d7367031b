#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unc {

enum class ErrorCode {
  Empty,
  NegativeEntry,
  NotNormalized,
  InvalidDimension,
  IndexOutOfRange,
  DimensionMismatch,
  NegativeOrder,
  GeneratorNotNormalized,
  InfiniteReference,
  UnsupportedOrder,
  UnsupportedFamily,
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NoConvergence,
  OrthogonalStates,
  RankOutOfRange,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every validation failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unc
