#include "stabgeo/errors.hpp"

namespace stabgeo {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::WrongSignature: return "WrongSignature";
    case Errc::EmptyAmpleCone: return "EmptyAmpleCone";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonpositiveRank: return "NonpositiveRank";
    case Errc::NotAmple: return "NotAmple";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::BadParameter: return "BadParameter";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::NotInside: return "NotInside";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "surface validation failed";
  for (const Violation& v : violations) {
    out += "\n  - ";
    out += errc_name(v.code);
    out += ": ";
    out += v.detail;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? Errc::BadParameter : violations.front().code,
            join_violations(violations)),
      violations_(std::move(violations)) {}

}  // namespace stabgeo
