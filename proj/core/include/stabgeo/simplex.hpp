#pragma once

#include "stabgeo/rational.hpp"

#include <vector>

namespace stabgeo::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational objective;              // valid when status == Optimal
  std::vector<Rational> solution;  // valid when status == Optimal
};

// Maximizes c.x subject to A x = b, x >= 0, in exact rational arithmetic.
// Two-phase dense simplex with Bland's rule, so it terminates on every
// input. Sized for the small systems that come out of cone certificates,
// not for large programs.
Result maximize(const std::vector<Rational>& c,
                const std::vector<std::vector<Rational>>& A,
                const std::vector<Rational>& b);

}  // namespace stabgeo::lp
