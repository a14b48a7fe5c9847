#pragma once

#include "stabgeo/chern.hpp"
#include "stabgeo/divisor.hpp"
#include "stabgeo/lattice.hpp"
#include "stabgeo/lepotier.hpp"
#include "stabgeo/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace stabgeo {

struct RationalComplex {
  Rational re;
  Rational im;

  bool operator==(const RationalComplex&) const = default;
};

std::string to_string(const RationalComplex& z);

// A point of the candidate-geometric parameter space: a deck parameter
// lambda for the complex reparametrization action, a polarization h, a
// twist class d, and slope-plane coordinates (beta, alpha). The point lies
// in the geometric region exactly when alpha clears the slope-limit value
// at beta.
struct GeoPoint {
  RationalComplex lambda;
  DivisorClass h;
  DivisorClass d;
  Rational beta;
  Rational alpha;

  bool operator==(const GeoPoint&) const = default;
};

// Central charge of a character at a point, kept in exact coordinates: the
// base value re0 + i im0 is rational, and the deck parameter acts by the
// factor exp(i pi lambda) only inside value(). Additivity and the action
// identities are therefore exact statements about rationals.
struct CentralCharge {
  RationalComplex lambda;
  Rational re0;
  Rational im0;

  std::complex<double> multiplier() const;  // exp(i pi lambda)
  std::complex<double> value() const;       // multiplier() * (re0 + i im0)
};

CentralCharge central_charge(const ValidatedSurface& s, const GeoPoint& p,
                             const ChernCharacter& v);

enum class Verdict { Inside, Outside, Unknown };

std::string to_string(Verdict v);

// Three-valued membership result with the data that certifies it. Inside
// is certified by alpha > upper (the closed-form bound dominates the limit
// function); Outside by a concrete candidate at slope beta whose value
// reaches alpha, which refutes membership under the Closed convention;
// anything else stays Unknown and carries the bracket for inspection.
struct Membership {
  Verdict verdict = Verdict::Unknown;
  Convention convention = Convention::Closed;
  Rational alpha;
  Rational upper;
  PointwiseSup pointwise;
  PhiBracket bracket;
};

Membership membership(const ValidatedSurface& s, const GeoPoint& p,
                      const EnumerationBox& box,
                      const std::vector<Rational>& delta_grid,
                      Convention convention = Convention::Closed);

// Ray check at the sampled level: every enumerated positive-rank candidate
// sitting at normalized slope exactly beta must have its base charge off
// the nonnegative real axis, i.e. re0 > 0. Violations list the offenders.
struct PositivityReport {
  bool ok = true;
  std::vector<ChernCharacter> violations;
};

PositivityReport charge_positivity_check(const ValidatedSurface& s,
                                         const GeoPoint& p,
                                         const EnumerationBox& box);

// Sampled lower estimate of the support ratio inf |Z(v)| / ||v|| over the
// enumerated candidate pool (all line bundles in the box, declared
// characters, and the skyscraper class). The norm is a user-supplied
// positive definite form on (rank, c1, ch2) coordinates; ratio_sq is the
// exact squared ratio at deck parameter zero, and ratio folds in the
// modulus of the deck factor.
struct SupportProbe {
  bool empty = true;
  Rational ratio_sq;
  double ratio = 0.0;
  std::optional<ChernCharacter> argmin;
};

SupportProbe support_probe(const ValidatedSurface& s, const GeoPoint& p,
                           const EnumerationBox& box,
                           const std::vector<std::vector<Rational>>& norm_gram);

// Convenience identity form on (rank, c1, ch2) coordinates.
std::vector<std::vector<Rational>> identity_norm(std::size_t picard_rank);

}  // namespace stabgeo
