#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <stabgeo/chern.hpp>
#include <stabgeo/errors.hpp>
#include <stabgeo/lattice.hpp>
#include <stabgeo/region.hpp>

using namespace stabgeo;

namespace {

ValidatedSurface plane() {
  SurfaceData s;
  s.rank = 1;
  s.gram = {{Integer(1)}};
  s.ample_mode = AmpleMode::PositiveCone;
  s.ample_reference = DivisorClass({Rational(1)});
  return validate_surface(s);
}

ValidatedSurface quadric() {
  SurfaceData s;
  s.rank = 2;
  s.gram = {{Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
  s.ample_mode = AmpleMode::PositiveCone;
  s.ample_reference = DivisorClass({Rational(1), Rational(1)});
  return validate_surface(s);
}

GeoPoint plane_point(Rational beta, Rational alpha) {
  GeoPoint p;
  p.lambda = RationalComplex{Rational(0), Rational(0)};
  p.h = DivisorClass({Rational(1)});
  p.d = DivisorClass::zero(1);
  p.beta = beta;
  p.alpha = alpha;
  return p;
}

const std::vector<Rational> kGrid{Rational(1), Rational(1, 2), Rational(1, 4)};

}  // namespace

TEST_CASE("central charge base coordinates") {
  ValidatedSurface p2 = plane();
  GeoPoint p = plane_point(Rational(0), Rational(1));

  CentralCharge zpt = central_charge(p2, p, skyscraper(p2));
  CHECK(zpt.re0 == Rational(-1));
  CHECK(zpt.im0 == Rational(0));

  ChernCharacter o1 = line_bundle(p2, DivisorClass({Rational(1)}));
  CentralCharge z1 = central_charge(p2, p, o1);
  CHECK(z1.re0 == Rational(1, 2));
  CHECK(z1.im0 == Rational(1));

  // Shifting beta and alpha moves the base charge linearly in (r, h.c1).
  GeoPoint q = plane_point(Rational(1), Rational(2));
  CentralCharge z1q = central_charge(p2, q, o1);
  CHECK(z1q.re0 == Rational(3, 2));
  CHECK(z1q.im0 == Rational(0));
}

TEST_CASE("deck parameter zero acts as the identity, bit for bit") {
  ValidatedSurface p2 = plane();
  GeoPoint p = plane_point(Rational(0), Rational(1));
  ChernCharacter o1 = line_bundle(p2, DivisorClass({Rational(1)}));
  CentralCharge z = central_charge(p2, p, o1);
  std::complex<double> m = z.multiplier();
  CHECK(m.real() == 1.0);
  CHECK(m.imag() == 0.0);
  std::complex<double> v = z.value();
  CHECK(v.real() == 0.5);
  CHECK(v.imag() == 1.0);
}

TEST_CASE("deck action matches an independent polar computation") {
  ValidatedSurface q = quadric();
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    GeoPoint p;
    p.lambda = RationalComplex{Rational(coord(rng), den(rng)),
                               Rational(coord(rng), den(rng))};
    p.h = DivisorClass({Rational(1 + den(rng)), Rational(1)});
    p.d = DivisorClass({Rational(coord(rng)), Rational(coord(rng))});
    p.beta = Rational(coord(rng), den(rng));
    p.alpha = Rational(coord(rng), den(rng));
    ChernCharacter v{Integer(1 + trial % 3),
                     DivisorClass({Rational(coord(rng)), Rational(coord(rng))}),
                     Rational(coord(rng), 2)};
    CentralCharge z = central_charge(q, p, v);
    double a = static_cast<double>(z.lambda.re.convert_to<double>());
    double b = static_cast<double>(z.lambda.im.convert_to<double>());
    std::complex<double> expect =
        std::polar(std::exp(-std::numbers::pi * b), std::numbers::pi * a) *
        std::complex<double>(z.re0.convert_to<double>(),
                             z.im0.convert_to<double>());
    CHECK(std::abs(z.value() - expect) <= 1e-12 * (1.0 + std::abs(expect)));
  }
}

TEST_CASE("central charge is additive in the character") {
  ValidatedSurface q = quadric();
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> coord(-4, 4);
  GeoPoint p;
  p.lambda = RationalComplex{Rational(1, 3), Rational(-1, 2)};
  p.h = DivisorClass({Rational(2), Rational(1)});
  p.d = DivisorClass({Rational(1), Rational(-1)});
  p.beta = Rational(1, 3);
  p.alpha = Rational(5, 2);
  for (int trial = 0; trial < 200; ++trial) {
    ChernCharacter v{Integer(coord(rng)),
                     DivisorClass({Rational(coord(rng)), Rational(coord(rng))}),
                     Rational(coord(rng), 2)};
    ChernCharacter w{Integer(coord(rng)),
                     DivisorClass({Rational(coord(rng)), Rational(coord(rng))}),
                     Rational(coord(rng), 2)};
    CentralCharge zv = central_charge(q, p, v);
    CentralCharge zw = central_charge(q, p, w);
    CentralCharge zs = central_charge(q, p, v + w);
    CHECK(zs.re0 == zv.re0 + zw.re0);
    CHECK(zs.im0 == zv.im0 + zw.im0);
  }
}

TEST_CASE("skyscraper charge is minus the deck factor") {
  ValidatedSurface p2 = plane();
  GeoPoint p = plane_point(Rational(2, 3), Rational(7, 5));
  p.lambda = RationalComplex{Rational(1, 3), Rational(0)};
  CentralCharge z = central_charge(p2, p, skyscraper(p2));
  CHECK(z.re0 == Rational(-1));
  CHECK(z.im0 == Rational(0));
  std::complex<double> v = z.value();
  CHECK(v.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(-std::sin(std::numbers::pi / 3))
                        .epsilon(1e-12));
}

TEST_CASE("membership verdict trio at an integral slope") {
  ValidatedSurface p2 = plane();
  EnumerationBox box;

  Membership in = membership(p2, plane_point(Rational(0), Rational(1, 100)),
                             box, kGrid, Convention::Closed);
  CHECK(in.verdict == Verdict::Inside);
  CHECK(in.upper == Rational(0));
  CHECK(in.alpha == Rational(1, 100));

  Membership out = membership(p2, plane_point(Rational(0), Rational(0)), box,
                              kGrid, Convention::Closed);
  CHECK(out.verdict == Verdict::Outside);
  REQUIRE(out.pointwise.witness.has_value());
  CHECK(out.pointwise.witness->c1[0] == Rational(0));

  Membership below = membership(p2, plane_point(Rational(0), Rational(-5)),
                                box, kGrid, Convention::Closed);
  CHECK(below.verdict == Verdict::Outside);

  // The punctured convention never certifies Outside.
  Membership unk = membership(p2, plane_point(Rational(0), Rational(0)), box,
                              kGrid, Convention::Punctured);
  CHECK(unk.verdict == Verdict::Unknown);
  CHECK(unk.convention == Convention::Punctured);
}

TEST_CASE("membership in the gap stays unknown") {
  // At beta = 3/2 on the plane the bound is 9/8 but the best sampled
  // candidate reaches only 3/4 without declared characters (the nearest
  // line bundles sit at slopes 1 and 2). alpha between them is undecided.
  ValidatedSurface p2 = plane();
  Membership m = membership(p2, plane_point(Rational(3, 2), Rational(1)),
                            EnumerationBox{}, kGrid, Convention::Closed);
  CHECK(m.verdict == Verdict::Unknown);
  CHECK(m.upper == Rational(9, 8));
  REQUIRE(m.pointwise.value.is_neg_inf());
}

TEST_CASE("positivity check flags the boundary candidate") {
  ValidatedSurface p2 = plane();
  EnumerationBox box;

  PositivityReport ok = charge_positivity_check(
      p2, plane_point(Rational(0), Rational(1)), box);
  CHECK(ok.ok);
  CHECK(ok.violations.empty());

  PositivityReport bad = charge_positivity_check(
      p2, plane_point(Rational(0), Rational(0)), box);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].rank == Integer(1));
  CHECK(bad.violations[0].c1[0] == Rational(0));

  PositivityReport neg = charge_positivity_check(
      p2, plane_point(Rational(0), Rational(-2)), box);
  CHECK_FALSE(neg.ok);
}

TEST_CASE("membership agrees with the positivity check on the plane") {
  ValidatedSurface p2 = plane();
  EnumerationBox box;
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    GeoPoint p = plane_point(Rational(num(rng), den(rng)),
                             Rational(num(rng), den(rng)));
    Membership m = membership(p2, p, box, kGrid, Convention::Closed);
    PositivityReport r = charge_positivity_check(p2, p, box);
    if (m.verdict == Verdict::Inside) CHECK(r.ok);
    if (m.verdict == Verdict::Outside && m.pointwise.value.is_finite() &&
        ExtendedRational{p.alpha} <= m.pointwise.value) {
      CHECK_FALSE(r.ok);
    }
  }
}

TEST_CASE("support probe on the plane with the identity norm") {
  ValidatedSurface p2 = plane();
  GeoPoint p = plane_point(Rational(0), Rational(1));
  SupportProbe probe = support_probe(p2, p, EnumerationBox{}, identity_norm(1));
  CHECK_FALSE(probe.empty);
  CHECK(probe.ratio_sq == Rational(5, 9));
  REQUIRE(probe.argmin.has_value());
  CHECK(probe.argmin->rank == Integer(1));
  CHECK(probe.argmin->c1[0] == Rational(-2));
  CHECK(probe.ratio == doctest::Approx(std::sqrt(5.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("support probe folds the deck modulus into the ratio") {
  ValidatedSurface p2 = plane();
  GeoPoint p = plane_point(Rational(0), Rational(1));
  p.lambda = RationalComplex{Rational(1, 2), Rational(1)};
  SupportProbe probe = support_probe(p2, p, EnumerationBox{}, identity_norm(1));
  CHECK(probe.ratio_sq == Rational(5, 9));  // deck independent
  CHECK(probe.ratio ==
        doctest::Approx(std::exp(-std::numbers::pi) * std::sqrt(5.0 / 9.0))
            .epsilon(1e-12));
}

TEST_CASE("support probe demands a positive definite norm") {
  ValidatedSurface p2 = plane();
  GeoPoint p = plane_point(Rational(0), Rational(1));
  auto bad = identity_norm(1);
  bad[2][2] = Rational(-1);
  try {
    support_probe(p2, p, EnumerationBox{}, bad);
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPositiveDefinite);
  }
}

TEST_CASE("string forms") {
  CHECK(to_string(RationalComplex{Rational(1, 2), Rational(-1)}) ==
        "1/2 - 1i");
  CHECK(to_string(RationalComplex{Rational(0), Rational(2)}) == "0 + 2i");
  CHECK(to_string(Verdict::Inside) == "inside");
  CHECK(to_string(Verdict::Outside) == "outside");
  CHECK(to_string(Verdict::Unknown) == "unknown");
  CHECK(to_string(Convention::Closed) == "closed");
  CHECK(to_string(Convention::Punctured) == "punctured");
}
