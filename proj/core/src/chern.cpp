#include "stabgeo/chern.hpp"

#include "stabgeo/errors.hpp"
#include "stabgeo/lattice.hpp"

namespace stabgeo {

namespace {

void require_same_dim(const ChernCharacter& a, const ChernCharacter& b) {
  if (a.c1.dim() != b.c1.dim()) {
    throw Error(Errc::DimensionMismatch,
                "characters have c1 dimensions " + std::to_string(a.c1.dim()) +
                    " and " + std::to_string(b.c1.dim()));
  }
}

void require_positive_rank(const ChernCharacter& v) {
  if (v.rank < 1) {
    throw Error(Errc::NonpositiveRank,
                "character " + to_string(v) + " has nonpositive rank");
  }
}

void require_ample(const ValidatedSurface& s, const DivisorClass& h) {
  if (!s.is_ample(h)) {
    throw Error(Errc::NotAmple, "class " + to_string(h) + " is not ample");
  }
}

}  // namespace

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
  require_same_dim(a, b);
  return ChernCharacter{a.rank + b.rank, a.c1 + b.c1, a.ch2 + b.ch2};
}

ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
  require_same_dim(a, b);
  return ChernCharacter{a.rank - b.rank, a.c1 - b.c1, a.ch2 - b.ch2};
}

std::string to_string(const ChernCharacter& v) {
  return "(" + v.rank.str() + ", " + to_string(v.c1) + ", " + to_string(v.ch2) +
         ")";
}

ChernCharacter skyscraper(std::size_t picard_rank) {
  return ChernCharacter{Integer(0), DivisorClass::zero(picard_rank), Rational(1)};
}

ChernCharacter skyscraper(const ValidatedSurface& s) {
  return skyscraper(s.picard_rank());
}

ChernCharacter line_bundle(const ValidatedSurface& s, const DivisorClass& line) {
  if (line.dim() != s.picard_rank()) {
    throw Error(Errc::DimensionMismatch,
                "line bundle class has dimension " + std::to_string(line.dim()));
  }
  return ChernCharacter{Integer(1), line, s.self_pair(line) / 2};
}

ChernCharacter twist(const ValidatedSurface& s, const ChernCharacter& v,
                     const DivisorClass& line) {
  if (v.c1.dim() != s.picard_rank() || line.dim() != s.picard_rank()) {
    throw Error(Errc::DimensionMismatch,
                "twist needs classes of dimension " +
                    std::to_string(s.picard_rank()));
  }
  const Rational r(v.rank);
  return ChernCharacter{
      v.rank, v.c1 + r * line,
      v.ch2 + s.pair(v.c1, line) + r * s.self_pair(line) / 2};
}

Rational slope(const ValidatedSurface& s, const ChernCharacter& v,
               const DivisorClass& h) {
  require_positive_rank(v);
  require_ample(s, h);
  return s.pair(h, v.c1) / Rational(v.rank);
}

Rational normalized_slope(const ValidatedSurface& s, const ChernCharacter& v,
                          const DivisorClass& h) {
  require_positive_rank(v);
  require_ample(s, h);
  return s.pair(h, v.c1) / (s.self_pair(h) * Rational(v.rank));
}

Rational discriminant(const ValidatedSurface& s, const ChernCharacter& v) {
  return s.self_pair(v.c1) - 2 * Rational(v.rank) * v.ch2;
}

}  // namespace stabgeo
