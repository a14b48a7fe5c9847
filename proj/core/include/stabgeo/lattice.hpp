#pragma once

#include "stabgeo/chern.hpp"
#include "stabgeo/divisor.hpp"
#include "stabgeo/errors.hpp"
#include "stabgeo/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stabgeo {

enum class AmpleMode { Polyhedral, PositiveCone };

// Scope of a user-declared stable character: stable for every polarization,
// or only for one fixed polarization class.
enum class Applicability { AllPolarizations, FixedPolarization };

struct StableCharacter {
  ChernCharacter character;
  Applicability applicability = Applicability::AllPolarizations;
  DivisorClass polarization;  // meaningful only for FixedPolarization
};

// Raw description of a surface as it arrives from a file or caller,
// before any consistency check has run.
struct SurfaceData {
  std::size_t rank = 0;  // Picard rank
  std::vector<std::vector<Integer>> gram;
  AmpleMode ample_mode = AmpleMode::PositiveCone;
  std::vector<DivisorClass> ample_generators;  // Polyhedral
  DivisorClass ample_reference;                // PositiveCone
  std::vector<StableCharacter> stable_characters;
  std::optional<bool> albanese_finite;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// Inertia of a symmetric rational matrix by exact congruence reduction.
// Throws NonSymmetric when the input is not symmetric.
Signature sylvester_signature(std::vector<std::vector<Rational>> sym);

// A surface description that passed validation: symmetric integral Gram
// matrix of signature (1, rank-1), a nonempty ample cone description, and
// consistent stable characters. Construct via validate_surface.
class ValidatedSurface {
public:
  std::size_t picard_rank() const { return data_.rank; }
  const SurfaceData& data() const { return data_; }
  const Signature& signature() const { return signature_; }
  AmpleMode ample_mode() const { return data_.ample_mode; }
  const std::vector<StableCharacter>& stable_characters() const {
    return data_.stable_characters;
  }

  // Intersection pairing in the fixed basis. Throws DimensionMismatch.
  Rational pair(const DivisorClass& a, const DivisorClass& b) const;
  Rational self_pair(const DivisorClass& a) const { return pair(a, a); }

  // Exact ample test. Polyhedral mode certifies interior membership with a
  // rational linear program; positive-cone mode tests a.a > 0 together with
  // a positive pairing against the reference class.
  bool is_ample(const DivisorClass& a) const;

  // A canonical interior point of the ample cone: the generator sum in
  // polyhedral mode, the reference class in positive-cone mode. Used as the
  // default base polarization for contractions.
  const DivisorClass& reference_ample() const { return reference_ample_; }

private:
  friend ValidatedSurface validate_surface(SurfaceData data);
  ValidatedSurface() = default;

  SurfaceData data_;
  Signature signature_;
  DivisorClass reference_ample_;
};

// Checks the raw data and either returns a usable surface or throws a
// ValidationError carrying every violation found.
ValidatedSurface validate_surface(SurfaceData data);

}  // namespace stabgeo
