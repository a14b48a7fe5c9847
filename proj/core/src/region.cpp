#include "stabgeo/region.hpp"

#include "stabgeo/errors.hpp"

#include <cmath>
#include <numbers>

namespace stabgeo {

std::string to_string(const RationalComplex& z) {
  return to_string(z.re) + (z.im < 0 ? " - " : " + ") + to_string(abs(z.im)) +
         "i";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "inside";
    case Verdict::Outside: return "outside";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::complex<double> CentralCharge::multiplier() const {
  const double a = static_cast<double>(lambda.re);
  const double b = static_cast<double>(lambda.im);
  const double modulus = std::exp(-std::numbers::pi * b);
  return {modulus * std::cos(std::numbers::pi * a),
          modulus * std::sin(std::numbers::pi * a)};
}

std::complex<double> CentralCharge::value() const {
  const std::complex<double> base(static_cast<double>(re0),
                                  static_cast<double>(im0));
  return multiplier() * base;
}

namespace {

void check_point(const ValidatedSurface& s, const GeoPoint& p) {
  if (p.h.dim() != s.picard_rank() || p.d.dim() != s.picard_rank()) {
    throw Error(Errc::DimensionMismatch,
                "point classes must have dimension " +
                    std::to_string(s.picard_rank()));
  }
  if (!s.is_ample(p.h)) {
    throw Error(Errc::NotAmple,
                "point polarization " + to_string(p.h) + " is not ample");
  }
}

}  // namespace

CentralCharge central_charge(const ValidatedSurface& s, const GeoPoint& p,
                             const ChernCharacter& v) {
  check_point(s, p);
  if (v.c1.dim() != s.picard_rank()) {
    throw Error(Errc::DimensionMismatch,
                "character c1 must have dimension " +
                    std::to_string(s.picard_rank()));
  }
  const Rational h2 = s.self_pair(p.h);
  const Rational r(v.rank);
  CentralCharge z;
  z.lambda = p.lambda;
  z.re0 = -v.ch2 + s.pair(p.d, v.c1) + p.alpha * h2 * r;
  z.im0 = s.pair(p.h, v.c1) - p.beta * h2 * r;
  return z;
}

Membership membership(const ValidatedSurface& s, const GeoPoint& p,
                      const EnumerationBox& box,
                      const std::vector<Rational>& delta_grid,
                      Convention convention) {
  check_point(s, p);
  Membership out;
  out.convention = convention;
  out.alpha = p.alpha;
  out.bracket = phi_profile(s, p.h, p.d, p.beta, box, delta_grid, convention);
  out.upper = out.bracket.upper;
  out.pointwise = out.bracket.pointwise;

  if (p.alpha > out.upper) {
    out.verdict = Verdict::Inside;
  } else if (convention == Convention::Closed &&
             out.pointwise.value.is_finite() &&
             ExtendedRational(p.alpha) <= out.pointwise.value) {
    // A candidate at slope beta reaches alpha, and the Closed convention
    // keeps pointwise values inside the limit estimate, so the strict
    // inequality defining the region fails.
    out.verdict = Verdict::Outside;
  } else {
    out.verdict = Verdict::Unknown;
  }
  return out;
}

PositivityReport charge_positivity_check(const ValidatedSurface& s,
                                         const GeoPoint& p,
                                         const EnumerationBox& box) {
  check_point(s, p);
  PositivityReport report;
  for (const ChernCharacter& v :
       enumerate_candidates(s, p.h, Enclosure(p.beta), Rational(0), box)) {
    const CentralCharge z = central_charge(s, p, v);
    if (z.im0 == 0 && z.re0 <= 0) {
      report.ok = false;
      report.violations.push_back(v);
    }
  }
  return report;
}

std::vector<std::vector<Rational>> identity_norm(std::size_t picard_rank) {
  const std::size_t n = picard_rank + 2;
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) gram[i][i] = 1;
  return gram;
}

SupportProbe support_probe(const ValidatedSurface& s, const GeoPoint& p,
                           const EnumerationBox& box,
                           const std::vector<std::vector<Rational>>& norm_gram) {
  check_point(s, p);
  const std::size_t n = s.picard_rank() + 2;
  if (norm_gram.size() != n) {
    throw Error(Errc::DimensionMismatch,
                "norm form must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
  const Signature sig = sylvester_signature(norm_gram);
  if (sig != Signature{n, 0, 0}) {
    throw Error(Errc::NotPositiveDefinite,
                "norm form has signature " + to_string(sig));
  }

  const auto norm_sq = [&](const ChernCharacter& v) {
    std::vector<Rational> coords;
    coords.reserve(n);
    coords.emplace_back(v.rank);
    for (const Rational& c : v.c1.coords()) coords.push_back(c);
    coords.push_back(v.ch2);
    Rational out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out += coords[i] * norm_gram[i][j] * coords[j];
      }
    }
    return out;
  };

  // The whole box, with no slope restriction: the support ratio quantifies
  // over every candidate class at once.
  std::vector<ChernCharacter> pool = enumerate_box(s, p.h, box);
  pool.push_back(skyscraper(s));

  SupportProbe probe;
  for (const ChernCharacter& v : pool) {
    const CentralCharge z = central_charge(s, p, v);
    const Rational z_sq = z.re0 * z.re0 + z.im0 * z.im0;
    const Rational ratio_sq = z_sq / norm_sq(v);
    if (probe.empty || ratio_sq < probe.ratio_sq) {
      probe.empty = false;
      probe.ratio_sq = ratio_sq;
      probe.argmin = v;
    }
  }
  if (!probe.empty) {
    const double deck_modulus =
        std::exp(-std::numbers::pi * static_cast<double>(p.lambda.im));
    probe.ratio = std::sqrt(static_cast<double>(probe.ratio_sq)) * deck_modulus;
  }
  return probe;
}

}  // namespace stabgeo
