#include "stabgeo/divisor.hpp"

#include "stabgeo/errors.hpp"

namespace stabgeo {

namespace {

void require_same_dim(const DivisorClass& a, const DivisorClass& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionMismatch,
                "divisor dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()) + " differ");
  }
}

}  // namespace

bool DivisorClass::is_zero() const {
  for (const Rational& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_dim(a, b);
  std::vector<Rational> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return DivisorClass(std::move(out));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_dim(a, b);
  std::vector<Rational> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return DivisorClass(std::move(out));
}

DivisorClass operator-(const DivisorClass& a) {
  std::vector<Rational> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = -a[i];
  return DivisorClass(std::move(out));
}

DivisorClass operator*(const Rational& s, const DivisorClass& a) {
  std::vector<Rational> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = s * a[i];
  return DivisorClass(std::move(out));
}

std::string to_string(const DivisorClass& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(a[i]);
  }
  out += ")";
  return out;
}

}  // namespace stabgeo
