#include "hfdts/error.hpp"

namespace hfdts {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::NonEmbeddedTwistCurve: return "NonEmbeddedTwistCurve";
    case ErrorCode::TargetIsAlpha: return "TargetIsAlpha";
    case ErrorCode::BasepointInBigon: return "BasepointInBigon";
    case ErrorCode::CrossesBasepointRegion: return "CrossesBasepointRegion";
    case ErrorCode::InvalidFingerMove: return "InvalidFingerMove";
    case ErrorCode::UnsupportedPage: return "UnsupportedPage";
    case ErrorCode::TwistCurveOutsidePage: return "TwistCurveOutsidePage";
    case ErrorCode::NoAdaptedConfiguration: return "NoAdaptedConfiguration";
    case ErrorCode::DeltaNotAdapted: return "DeltaNotAdapted";
    case ErrorCode::MissingMarks: return "MissingMarks";
    case ErrorCode::CornerMismatch: return "CornerMismatch";
    case ErrorCode::StepBudgetExhausted: return "StepBudgetExhausted";
    case ErrorCode::NotNice: return "NotNice";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::SplittingViolated: return "SplittingViolated";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotChainMap: return "NotChainMap";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

}  // namespace hfdts
