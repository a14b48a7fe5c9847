#include "stabgeo/rational.hpp"

#include "stabgeo/errors.hpp"

#include <cctype>
#include <cmath>

namespace stabgeo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Integer parse_digits(std::string_view digits, std::string_view original) {
  if (!all_digits(digits)) {
    throw Error(Errc::ParseError,
                "invalid rational literal '" + std::string(original) + "'");
  }
  return Integer(std::string(digits));
}

Rational ten_power(std::size_t k) {
  Integer p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return Rational(p);
}

}  // namespace

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const std::string_view original = text;
  if (s.empty()) {
    throw Error(Errc::ParseError, "empty rational literal");
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational magnitude;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_digits(s.substr(0, slash), original);
    Integer den = parse_digits(s.substr(slash + 1), original);
    if (den == 0) {
      throw Error(Errc::ParseError,
                  "zero denominator in '" + std::string(original) + "'");
    }
    magnitude = Rational(num) / Rational(den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw Error(Errc::ParseError,
                  "invalid rational literal '" + std::string(original) + "'");
    }
    Integer whole_part = whole.empty() ? Integer(0) : parse_digits(whole, original);
    Integer frac_part = frac.empty() ? Integer(0) : parse_digits(frac, original);
    magnitude = Rational(whole_part) + Rational(frac_part) / ten_power(frac.size());
  } else {
    magnitude = Rational(parse_digits(s, original));
  }

  return negative ? Rational(-magnitude) : magnitude;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw Error(Errc::BadParameter, "non-finite double has no rational value");
  }
  return Rational(x);
}

Integer floor_rational(const Rational& x) {
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  Integer q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Integer ceil_rational(const Rational& x) { return -floor_rational(-x); }

Rational floor_to_grid(const Rational& x, unsigned bits) {
  const Integer scale = Integer(1) << bits;
  return Rational(floor_rational(x * Rational(scale)), scale);
}

Rational ceil_to_grid(const Rational& x, unsigned bits) {
  const Integer scale = Integer(1) << bits;
  return Rational(ceil_rational(x * Rational(scale)), scale);
}

Enclosure::Enclosure(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw Error(Errc::BadParameter,
                "enclosure bounds out of order: [" + to_string(lo_) + ", " +
                    to_string(hi_) + "]");
  }
}

Enclosure Enclosure::from_double(double x, unsigned bits) {
  const Rational exact = rational_from_double(x);
  return Enclosure(floor_to_grid(exact, bits), ceil_to_grid(exact, bits));
}

const Rational& Enclosure::value() const {
  if (!exact()) {
    throw Error(Errc::PreconditionViolated,
                "enclosure " + to_string(*this) + " is not a single rational");
  }
  return lo_;
}

std::string to_string(const Enclosure& e) {
  if (e.exact()) return to_string(e.lo());
  return "[" + to_string(e.lo()) + ", " + to_string(e.hi()) + "]";
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) {
    throw Error(Errc::PreconditionViolated, "infinite value has no rational part");
  }
  return value_;
}

ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) {
  return a < b ? b : a;
}

std::string to_string(const ExtendedRational& v) {
  if (v.is_neg_inf()) return "-inf";
  if (v.is_pos_inf()) return "+inf";
  return to_string(v.value());
}

}  // namespace stabgeo
