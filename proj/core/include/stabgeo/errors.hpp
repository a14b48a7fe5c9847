#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stabgeo {

enum class Errc {
  NonSymmetric,
  WrongSignature,
  EmptyAmpleCone,
  DimensionMismatch,
  NonpositiveRank,
  NotAmple,
  EmptyGrid,
  BadParameter,
  PreconditionViolated,
  NotPositiveDefinite,
  NotInside,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

struct Violation {
  Errc code;
  std::string detail;
};

// Surface validation reports every violation it finds, not just the first.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

private:
  std::vector<Violation> violations_;
};

}  // namespace stabgeo
