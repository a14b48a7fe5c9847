#pragma once

#include "stabgeo/errors.hpp"
#include "stabgeo/lattice.hpp"
#include "stabgeo/region.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace stabgeo {

// Everything about a point except alpha: the coordinates the fiberwise
// homotopies keep frozen and the base contraction moves.
struct BaseCoordinate {
  RationalComplex lambda;
  DivisorClass h;
  DivisorClass d;
  Rational beta;

  bool operator==(const BaseCoordinate&) const = default;
};

BaseCoordinate base_of(const GeoPoint& p);
GeoPoint with_alpha(BaseCoordinate z, Rational alpha);

// The continuous majorant the retraction tracks: one above the closed-form
// bound, so its graph lies strictly inside the region over every base
// coordinate.
Rational g_majorant(const ValidatedSurface& s, const BaseCoordinate& z);

// Raises alpha toward the majorant value without ever dropping below the
// starting value. Requires t in [0, 1].
template <typename T>
T lift_homotopy(const T& alpha, const T& g, const T& t) {
  if (t < T(0) || t > T(1)) {
    std::ostringstream msg;
    msg << "homotopy time " << t << " outside [0, 1]";
    throw Error(Errc::BadParameter, msg.str());
  }
  return std::max(alpha, T((g - alpha) * t + alpha));
}

// Slides alpha affinely onto the majorant graph. Requires t in [0, 1].
// The formula is defined for any alpha; staying above the graph along the
// way needs alpha >= g, which verify_path checks sample by sample.
template <typename T>
T graph_homotopy(const T& alpha, const T& g, const T& t) {
  if (t < T(0) || t > T(1)) {
    std::ostringstream msg;
    msg << "homotopy time " << t << " outside [0, 1]";
    throw Error(Errc::BadParameter, msg.str());
  }
  return T(alpha * (T(1) - t) + g * t);
}

// Straight-line contraction of the base coordinates onto z0.
BaseCoordinate base_contraction(const BaseCoordinate& z, const Rational& t,
                                const BaseCoordinate& z0);

enum class Phase { Lift, Graph, Base };

std::string to_string(Phase p);

struct PathSample {
  Rational t;
  Phase phase;
  GeoPoint point;
};

// An explicit contraction path: lift to clear the majorant, slide onto its
// graph, then ride the graph while the base coordinates contract. The
// first sample is the input point and the last equals base_point exactly.
struct ContractionPath {
  std::vector<PathSample> samples;
  GeoPoint base_point;
};

struct ContractOptions {
  bool allow_uncertified = false;  // skip the Inside certificate on start
  std::optional<GeoPoint> base;    // must sit on the majorant graph
};

ContractionPath contract(const ValidatedSurface& s, const GeoPoint& start,
                         long steps_per_phase,
                         const ContractOptions& opts = {});

struct PathViolation {
  std::size_t sample;
  std::string check;
  std::string detail;
};

struct PathReport {
  std::vector<PathViolation> violations;
  bool endpoint_matches = false;
  Rational max_step_jump;

  bool ok() const { return violations.empty() && endpoint_matches; }
};

// Re-derives every certificate a contraction path claims: time ordering,
// phase ordering, frozen base coordinates during the fiberwise phases,
// monotone lift, the graph bound, exact majorant tracking and ample
// polarizations during the base phase, and the endpoint. All checks are
// exact rational comparisons; max_step_jump is a diagnostic, not a check.
PathReport verify_path(const ValidatedSurface& s, const ContractionPath& path,
                       const Rational& endpoint_tolerance = Rational(0));

// Sampled connectivity of the strict epigraph {alpha > f(x)} of the pinch
// profile f(x) = 1/x (with the pinch value f(0) = 0) on a rectangle. The
// fiber over x = 0 meets the grid exactly when the rectangle is symmetric,
// which is what exhibits the failure of fiberwise contractibility.
struct PinchRegion {
  double x0 = 0, x1 = 0, alpha0 = 0, alpha1 = 0;
  std::size_t nx = 0, na = 0;
  std::vector<int> component;  // nx * na entries, row-major in x; -1 outside
  int component_count = 0;

  struct Representative {
    int component;
    double x;
    double alpha;
  };
  std::vector<Representative> representatives;  // first cell per component

  double x_at(std::size_t ix) const;
  double alpha_at(std::size_t ia) const;
  int component_at(std::size_t ix, std::size_t ia) const;
};

PinchRegion pinch_demo(double x0, double x1, double alpha0, double alpha1,
                       double spacing);

}  // namespace stabgeo
