#pragma once

#include "stabgeo/divisor.hpp"
#include "stabgeo/rational.hpp"

#include <cstddef>
#include <string>

namespace stabgeo {

class ValidatedSurface;

// Numerical Chern character (ch0, ch1, ch2) of a coherent sheaf, with ch1
// in lattice coordinates. ch2 is rational because twists by rational
// classes and line-bundle classes produce half-integers.
struct ChernCharacter {
  Integer rank;
  DivisorClass c1;
  Rational ch2;

  bool operator==(const ChernCharacter&) const = default;
};

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);

std::string to_string(const ChernCharacter& v);

// Class of a skyscraper sheaf of a point: (0, 0, 1).
ChernCharacter skyscraper(std::size_t picard_rank);
ChernCharacter skyscraper(const ValidatedSurface& s);

// Class of the line bundle with first Chern class `line`: (1, line, line^2/2).
ChernCharacter line_bundle(const ValidatedSurface& s, const DivisorClass& line);

// Chern character of v twisted by the line bundle on `line`.
ChernCharacter twist(const ValidatedSurface& s, const ChernCharacter& v,
                     const DivisorClass& line);

// Classical slope (h.c1)/rank. Requires positive rank and ample h.
Rational slope(const ValidatedSurface& s, const ChernCharacter& v,
               const DivisorClass& h);

// Slope normalized by the degree of the polarization, (h.c1)/(h^2 rank).
// This is the scale on which slope windows and the region bound live.
Rational normalized_slope(const ValidatedSurface& s, const ChernCharacter& v,
                          const DivisorClass& h);

// Discriminant c1^2 - 2 rank ch2; nonnegative on slope-stable sheaves.
Rational discriminant(const ValidatedSurface& s, const ChernCharacter& v);

}  // namespace stabgeo
