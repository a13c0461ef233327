#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfdts {

enum class ErrorCode {
  InvalidInput,
  InvalidComplex,
  NonEmbeddedTwistCurve,
  TargetIsAlpha,
  BasepointInBigon,
  CrossesBasepointRegion,
  InvalidFingerMove,
  UnsupportedPage,
  TwistCurveOutsidePage,
  NoAdaptedConfiguration,
  DeltaNotAdapted,
  MissingMarks,
  CornerMismatch,
  StepBudgetExhausted,
  NotNice,
  NotAdmissible,
  SplittingViolated,
  NotAComplex,
  NotChainMap,
  NotExact,
  ConsistencyFailure,
  InvalidGrid,
  ArithmeticOverflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace hfdts
