#pragma once

#include "stabgeo/chern.hpp"
#include "stabgeo/divisor.hpp"
#include "stabgeo/lattice.hpp"
#include "stabgeo/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabgeo {

// How the slope-limit estimate treats candidates sitting exactly at the
// center slope. Closed keeps them (the estimate dominates the pointwise
// supremum); Punctured drops them and reports the approach behaviour only.
enum class Convention { Closed, Punctured };

std::string to_string(Convention c);

// Bounds for the finite candidate search: line-bundle classes range over
// the integer box [-coordinate_bound, coordinate_bound]^rank, and declared
// stable characters above max_rank are skipped.
struct EnumerationBox {
  long coordinate_bound = 5;
  long max_rank = 8;
};

struct PointwiseSup {
  ExtendedRational value;  // -inf when no candidate sits at the slope
  std::optional<ChernCharacter> witness;
};

struct WindowEntry {
  Rational delta;
  ExtendedRational sup;  // supremum over the punctured slope window
  std::optional<ChernCharacter> witness;
};

// Two-sided numerical estimate of the slope-limit function at one slope:
// an exact closed-form upper bound and finite-sample lower data.
struct PhiBracket {
  Rational upper;
  PointwiseSup pointwise;  // meaningful only when beta is exact
  std::vector<WindowEntry> windows;
  ExtendedRational headline;  // best certified lower estimate
  Convention convention;
};

// Closed-form upper bound ((beta - d.h/h^2)^2 - d.d/h^2) / 2. It dominates
// every candidate value at normalized slope beta, hence the limit function
// itself; see candidate_value for the quantity being bounded.
Rational phi_upper(const ValidatedSurface& s, const DivisorClass& h,
                   const DivisorClass& d, const Rational& beta);

// Supremum of the upper bound over an enclosure. The bound is convex in
// beta, so the supremum sits at an endpoint and stays exact.
Rational phi_upper_sup(const ValidatedSurface& s, const DivisorClass& h,
                       const DivisorClass& d, const Enclosure& beta);

// Normalized second-Chern value (ch2 - d.c1)/(h^2 rank) of a candidate,
// the quantity whose slope-limit the bracket estimates.
Rational candidate_value(const ValidatedSurface& s, const DivisorClass& h,
                         const DivisorClass& d, const ChernCharacter& v);

// The finite candidate pool near a slope: integral line-bundle classes from
// the coordinate box plus declared stable characters, filtered to
// normalized slope within [beta.lo - delta, beta.hi + delta] and to
// nonnegative discriminant. Line bundles come first in lexicographic
// order, then declared characters in file order; duplicates are dropped.
std::vector<ChernCharacter> enumerate_candidates(const ValidatedSurface& s,
                                                 const DivisorClass& h,
                                                 const Enclosure& beta,
                                                 const Rational& delta,
                                                 const EnumerationBox& box);

// Every candidate in the box with no slope restriction, for probes that
// quantify over the whole pool. h only decides which fixed-polarization
// characters apply.
std::vector<ChernCharacter> enumerate_box(const ValidatedSurface& s,
                                          const DivisorClass& h,
                                          const EnumerationBox& box);

// Largest candidate value among candidates at normalized slope exactly
// beta, with a witness realizing it.
PointwiseSup phi_at_slope(const ValidatedSurface& s, const DivisorClass& h,
                          const DivisorClass& d, const Rational& beta,
                          const EnumerationBox& box);

// Full bracket on a strictly decreasing positive delta grid. The punctured
// window suprema sample the slope-limit approach; the headline estimate is
// their last entry, joined with the pointwise supremum under the Closed
// convention. beta may be an enclosure, in which case pointwise data is
// unavailable and only the upper bound and window suprema are reported.
PhiBracket phi_profile(const ValidatedSurface& s, const DivisorClass& h,
                       const DivisorClass& d, const Enclosure& beta,
                       const EnumerationBox& box,
                       const std::vector<Rational>& delta_grid,
                       Convention convention = Convention::Closed);

}  // namespace stabgeo
