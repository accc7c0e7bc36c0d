#pragma once

#include <stdexcept>
#include <string>

namespace bsforge {

enum class ErrorKind {
  UndefinedWeight,     // weight/degree/initial form of the zero polynomial
  NeedsCap,            // division exhausted its step budget without a cap
  CollinearWeights,
  HypothesesFailed,
  WeightGoalNotMet,
  DivisionTruncated,
  Infinite,            // staircase complement is not finite
  Inconclusive,        // a certification step was truncated
  InvalidArgument,
  Parse,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::UndefinedWeight: return "UndefinedWeight";
    case ErrorKind::NeedsCap: return "NeedsCap";
    case ErrorKind::CollinearWeights: return "CollinearWeights";
    case ErrorKind::HypothesesFailed: return "HypothesesFailed";
    case ErrorKind::WeightGoalNotMet: return "WeightGoalNotMet";
    case ErrorKind::DivisionTruncated: return "DivisionTruncated";
    case ErrorKind::Infinite: return "Infinite";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bsforge
