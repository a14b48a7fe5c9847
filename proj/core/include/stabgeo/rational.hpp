#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace stabgeo {

// Exact arbitrary-precision arithmetic with expression templates disabled,
// so values behave like ordinary regular types in std algorithms.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Canonical rendering: lowest terms, sign on the numerator, plain "p" when
// the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p/q", integer, and finite decimal literals ("-3/4", "12", "2.5").
// Every accepted literal converts exactly; there is no rounding here.
Rational parse_rational(std::string_view text);

// Every finite double is a dyadic rational; this returns its exact value.
Rational rational_from_double(double x);

Integer floor_rational(const Rational& x);
Integer ceil_rational(const Rational& x);

// Largest grid point <= x (resp. smallest >= x) on the 2^-bits grid.
Rational floor_to_grid(const Rational& x, unsigned bits);
Rational ceil_to_grid(const Rational& x, unsigned bits);

// A real parameter bracketed by rationals, lo <= x <= hi. Rational input is
// kept exact (lo == hi); a double is first converted exactly and then pushed
// outward onto the dyadic grid, so the true value never escapes the bracket.
class Enclosure {
public:
  static constexpr unsigned default_bits = 40;

  Enclosure() = default;
  Enclosure(const Rational& exact_value)  // NOLINT: implicit by design
      : lo_(exact_value), hi_(exact_value) {}
  Enclosure(Rational lo, Rational hi);

  static Enclosure from_double(double x, unsigned bits = default_bits);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool exact() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }

  // Exact value of a width-zero enclosure; throws otherwise.
  const Rational& value() const;

  bool operator==(const Enclosure&) const = default;

private:
  Rational lo_;
  Rational hi_;
};

std::string to_string(const Enclosure& e);

// The extended rational line: rationals plus the two infinities. Used for
// suprema over candidate sets that may be empty.
class ExtendedRational {
public:
  ExtendedRational() : kind_(Kind::NegInf) {}
  ExtendedRational(const Rational& v)  // NOLINT: implicit by design
      : kind_(Kind::Finite), value_(v) {}

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  // Finite value; throws PreconditionViolated at an infinity.
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ == b.kind_) {
      return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }
    if (a.kind_ == Kind::NegInf) return true;
    if (b.kind_ == Kind::NegInf) return false;
    return b.kind_ == Kind::PosInf;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return !(b < a);
  }

private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit ExtendedRational(Kind k) : kind_(k) {}

  Kind kind_;
  Rational value_;
};

ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b);
std::string to_string(const ExtendedRational& v);

}  // namespace stabgeo
