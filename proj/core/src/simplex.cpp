#include "stabgeo/simplex.hpp"

#include "stabgeo/errors.hpp"

#include <cstddef>
#include <optional>

namespace stabgeo::lp {

namespace {

class Tableau {
public:
  // Columns 0..cols-1 are variables, column cols is the right-hand side.
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows, std::vector<Rational>(cols + 1)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return cells_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i][j]; }
  Rational& rhs(std::size_t i) { return cells_[i][cols_]; }
  const Rational& rhs(std::size_t i) const { return cells_[i][cols_]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational p = cells_[pr][pc];
    for (std::size_t j = 0; j <= cols_; ++j) cells_[pr][j] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr || cells_[i][pc] == 0) continue;
      const Rational f = cells_[i][pc];
      for (std::size_t j = 0; j <= cols_; ++j) {
        cells_[i][j] -= f * cells_[pr][j];
      }
    }
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> cells_;
};

// Reduced cost of column j for a maximization with cost vector `cost`.
Rational reduced_cost(const Tableau& t, const std::vector<std::size_t>& basis,
                      const std::vector<Rational>& cost, std::size_t j) {
  Rational rc = cost[j];
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (cost[basis[i]] != 0 && t.at(i, j) != 0) {
      rc -= cost[basis[i]] * t.at(i, j);
    }
  }
  return rc;
}

// Runs Bland-rule pivots until optimal (returns true) or unbounded (false).
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis,
                 const std::vector<Rational>& cost) {
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (reduced_cost(t, basis, cost, j) > 0) {
        entering = j;
        break;
      }
    }
    if (!entering) return true;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.at(i, *entering) <= 0) continue;
      const Rational ratio = t.rhs(i) / t.at(i, *entering);
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) return false;

    t.pivot(*leaving, *entering);
    basis[*leaving] = *entering;
  }
}

}  // namespace

Result maximize(const std::vector<Rational>& c,
                const std::vector<std::vector<Rational>>& A,
                const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) {
    throw Error(Errc::DimensionMismatch, "right-hand side does not match rows");
  }
  for (const auto& row : A) {
    if (row.size() != n) {
      throw Error(Errc::DimensionMismatch, "constraint row does not match cost");
    }
  }

  // Phase 1: find a basic feasible solution with artificial variables.
  Tableau t(m, n + m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = flip ? -A[i][j] : A[i][j];
    t.rhs(i) = flip ? Rational(-b[i]) : b[i];
    t.at(i, n + i) = 1;
    basis[i] = n + i;
  }

  std::vector<Rational> phase1_cost(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase1_cost[j] = -1;
  run_simplex(t, basis, phase1_cost);

  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeasibility += t.rhs(i);
  }
  if (infeasibility != 0) {
    return Result{Status::Infeasible, Rational(0), {}};
  }

  // Drive zero-valued artificials out of the basis; a row with no pivot
  // candidate is a redundant constraint and gets dropped.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) {
      keep.push_back(i);
      continue;
    }
    bool pivoted = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.at(i, j) != 0) {
        t.pivot(i, j);
        basis[i] = j;
        keep.push_back(i);
        pivoted = true;
        break;
      }
    }
    if (!pivoted) continue;
  }

  Tableau t2(keep.size(), n);
  std::vector<std::size_t> basis2(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) t2.at(r, j) = t.at(keep[r], j);
    t2.rhs(r) = t.rhs(keep[r]);
    basis2[r] = basis[keep[r]];
  }

  if (!run_simplex(t2, basis2, c)) {
    return Result{Status::Unbounded, Rational(0), {}};
  }

  Result out;
  out.status = Status::Optimal;
  out.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < t2.rows(); ++i) {
    out.solution[basis2[i]] = t2.rhs(i);
  }
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.solution[j];
  return out;
}

}  // namespace stabgeo::lp
