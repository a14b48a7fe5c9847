#pragma once

#include "stabgeo/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace stabgeo {

// A rational divisor class in coordinates relative to a fixed lattice basis.
// Pure coordinate arithmetic; intersection numbers live on the surface,
// which owns the Gram matrix.
class DivisorClass {
public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static DivisorClass zero(std::size_t dim) {
    return DivisorClass(std::vector<Rational>(dim));
  }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  bool operator==(const DivisorClass&) const = default;

private:
  std::vector<Rational> coords_;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Rational& s, const DivisorClass& a);

std::string to_string(const DivisorClass& a);

}  // namespace stabgeo
