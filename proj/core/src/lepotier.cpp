#include "stabgeo/lepotier.hpp"

#include "stabgeo/errors.hpp"

#include <algorithm>

namespace stabgeo {

std::string to_string(Convention c) {
  return c == Convention::Closed ? "closed" : "punctured";
}

namespace {

void check_box(const EnumerationBox& box) {
  if (box.coordinate_bound < 0) {
    throw Error(Errc::BadParameter, "coordinate bound must be nonnegative");
  }
  if (box.max_rank < 1) {
    throw Error(Errc::BadParameter, "max rank must be at least 1");
  }
}

void check_polarization(const ValidatedSurface& s, const DivisorClass& h) {
  if (!s.is_ample(h)) {
    throw Error(Errc::NotAmple, "polarization " + to_string(h) + " is not ample");
  }
}

void check_twist(const ValidatedSurface& s, const DivisorClass& d) {
  if (d.dim() != s.picard_rank()) {
    throw Error(Errc::DimensionMismatch,
                "twist class has dimension " + std::to_string(d.dim()) +
                    ", expected " + std::to_string(s.picard_rank()));
  }
}

// True when fixed is a positive rational multiple of h, i.e. both classes
// cut out the same polarization ray.
bool same_polarization_ray(const DivisorClass& fixed, const DivisorClass& h) {
  if (fixed.dim() != h.dim()) return false;
  Rational scale = 0;
  for (std::size_t i = 0; i < fixed.dim(); ++i) {
    if (fixed[i] != 0) {
      if (h[i] == 0) return false;
      scale = h[i] / fixed[i];
      break;
    }
  }
  if (scale <= 0) return false;
  for (std::size_t i = 0; i < fixed.dim(); ++i) {
    if (scale * fixed[i] != h[i]) return false;
  }
  return true;
}

struct SlopeWindow {
  Rational lo;
  Rational hi;
  Rational core_lo;  // the beta enclosure itself
  Rational core_hi;
  bool punctured = false;
  bool unrestricted = false;

  static SlopeWindow everything() {
    SlopeWindow w;
    w.unrestricted = true;
    return w;
  }

  bool admits(const Rational& mu) const {
    if (unrestricted) return true;
    if (mu < lo || mu > hi) return false;
    if (punctured && mu >= core_lo && mu <= core_hi) return false;
    return true;
  }
};

// Walks the integer box [-n, n]^rho in lexicographic order and collects
// admissible line bundles, then appends admissible declared characters.
std::vector<ChernCharacter> collect(const ValidatedSurface& s,
                                    const DivisorClass& h,
                                    const SlopeWindow& window,
                                    const EnumerationBox& box) {
  const std::size_t rho = s.picard_rank();
  const Rational h2 = s.self_pair(h);
  std::vector<ChernCharacter> out;

  const long n = box.coordinate_bound;
  std::vector<long> coords(rho, -n);
  for (;;) {
    DivisorClass line = DivisorClass::zero(rho);
    for (std::size_t i = 0; i < rho; ++i) line[i] = coords[i];
    const Rational mu = s.pair(h, line) / h2;
    if (window.admits(mu)) {
      out.push_back(line_bundle(s, line));
    }

    std::size_t pos = rho;
    while (pos > 0) {
      if (coords[pos - 1] < n) {
        ++coords[pos - 1];
        std::fill(coords.begin() + static_cast<long>(pos), coords.end(), -n);
        break;
      }
      --pos;
    }
    if (pos == 0) break;
  }

  for (const StableCharacter& sc : s.stable_characters()) {
    if (sc.character.rank > box.max_rank) continue;
    if (sc.applicability == Applicability::FixedPolarization &&
        !same_polarization_ray(sc.polarization, h)) {
      continue;
    }
    if (discriminant(s, sc.character) < 0) continue;
    const Rational mu =
        s.pair(h, sc.character.c1) / (h2 * Rational(sc.character.rank));
    if (!window.admits(mu)) continue;
    if (std::find(out.begin(), out.end(), sc.character) == out.end()) {
      out.push_back(sc.character);
    }
  }
  return out;
}

PointwiseSup best_candidate(const ValidatedSurface& s, const DivisorClass& h,
                            const DivisorClass& d,
                            const std::vector<ChernCharacter>& candidates) {
  PointwiseSup out{ExtendedRational::neg_inf(), std::nullopt};
  for (const ChernCharacter& v : candidates) {
    const ExtendedRational value(candidate_value(s, h, d, v));
    if (out.value < value) {
      out.value = value;
      out.witness = v;
    }
  }
  return out;
}

}  // namespace

Rational phi_upper(const ValidatedSurface& s, const DivisorClass& h,
                   const DivisorClass& d, const Rational& beta) {
  check_polarization(s, h);
  check_twist(s, d);
  const Rational h2 = s.self_pair(h);
  const Rational centered = beta - s.pair(d, h) / h2;
  return (centered * centered - s.self_pair(d) / h2) / 2;
}

Rational phi_upper_sup(const ValidatedSurface& s, const DivisorClass& h,
                       const DivisorClass& d, const Enclosure& beta) {
  const Rational at_lo = phi_upper(s, h, d, beta.lo());
  if (beta.exact()) return at_lo;
  const Rational at_hi = phi_upper(s, h, d, beta.hi());
  return std::max(at_lo, at_hi);
}

Rational candidate_value(const ValidatedSurface& s, const DivisorClass& h,
                         const DivisorClass& d, const ChernCharacter& v) {
  if (v.rank < 1) {
    throw Error(Errc::NonpositiveRank,
                "candidate " + to_string(v) + " has nonpositive rank");
  }
  check_twist(s, d);
  return (v.ch2 - s.pair(d, v.c1)) / (s.self_pair(h) * Rational(v.rank));
}

std::vector<ChernCharacter> enumerate_candidates(const ValidatedSurface& s,
                                                 const DivisorClass& h,
                                                 const Enclosure& beta,
                                                 const Rational& delta,
                                                 const EnumerationBox& box) {
  check_box(box);
  check_polarization(s, h);
  if (delta < 0) {
    throw Error(Errc::BadParameter,
                "slope window half-width must be nonnegative, got " +
                    to_string(delta));
  }
  SlopeWindow window{beta.lo() - delta, beta.hi() + delta, beta.lo(),
                     beta.hi(), false};
  return collect(s, h, window, box);
}

std::vector<ChernCharacter> enumerate_box(const ValidatedSurface& s,
                                          const DivisorClass& h,
                                          const EnumerationBox& box) {
  check_box(box);
  check_polarization(s, h);
  return collect(s, h, SlopeWindow::everything(), box);
}

PointwiseSup phi_at_slope(const ValidatedSurface& s, const DivisorClass& h,
                          const DivisorClass& d, const Rational& beta,
                          const EnumerationBox& box) {
  check_box(box);
  check_polarization(s, h);
  check_twist(s, d);
  SlopeWindow window{beta, beta, beta, beta, false};
  return best_candidate(s, h, d, collect(s, h, window, box));
}

PhiBracket phi_profile(const ValidatedSurface& s, const DivisorClass& h,
                       const DivisorClass& d, const Enclosure& beta,
                       const EnumerationBox& box,
                       const std::vector<Rational>& delta_grid,
                       Convention convention) {
  check_box(box);
  check_polarization(s, h);
  check_twist(s, d);
  if (delta_grid.empty()) {
    throw Error(Errc::EmptyGrid, "delta grid must contain at least one entry");
  }
  for (std::size_t i = 0; i < delta_grid.size(); ++i) {
    if (delta_grid[i] <= 0) {
      throw Error(Errc::BadParameter,
                  "delta grid entries must be positive, got " +
                      to_string(delta_grid[i]));
    }
    if (i > 0 && delta_grid[i] >= delta_grid[i - 1]) {
      throw Error(Errc::BadParameter, "delta grid must be strictly decreasing");
    }
  }

  PhiBracket out;
  out.convention = convention;
  out.upper = phi_upper_sup(s, h, d, beta);
  if (beta.exact()) {
    out.pointwise = phi_at_slope(s, h, d, beta.value(), box);
  } else {
    out.pointwise = PointwiseSup{ExtendedRational::neg_inf(), std::nullopt};
  }

  out.windows.reserve(delta_grid.size());
  for (const Rational& delta : delta_grid) {
    SlopeWindow window{beta.lo() - delta, beta.hi() + delta, beta.lo(),
                       beta.hi(), true};
    const PointwiseSup sup = best_candidate(s, h, d, collect(s, h, window, box));
    out.windows.push_back(WindowEntry{delta, sup.value, sup.witness});
  }

  out.headline = out.windows.back().sup;
  if (convention == Convention::Closed) {
    out.headline = max(out.headline, out.pointwise.value);
  }
  return out;
}

}  // namespace stabgeo
