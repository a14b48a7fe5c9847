#include "stabgeo/lattice.hpp"

#include "stabgeo/simplex.hpp"

#include <cstddef>
#include <utility>

namespace stabgeo {

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) +
         ", " + std::to_string(s.zero) + ")";
}

Signature sylvester_signature(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error(Errc::DimensionMismatch, "signature input is not square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        throw Error(Errc::NonSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + to_string(m[i][j]) + " but (" +
                        std::to_string(j) + "," + std::to_string(i) + ") = " +
                        to_string(m[j][i]));
      }
    }
  }

  // Symmetric congruence reduction: each step produces one diagonal pivot,
  // applying the same elimination to rows and columns so inertia is
  // preserved. Everything stays rational, so signs are exact.
  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][i] != 0) {
        p = i;
        break;
      }
    }
    if (p == n) {
      // All remaining diagonal entries vanish; pull a nonzero off-diagonal
      // entry onto the diagonal with a congruence row/column addition.
      std::size_t fi = n, fj = n;
      for (std::size_t i = k; i < n && fi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (m[i][j] != 0) {
            fi = i;
            fj = j;
            break;
          }
        }
      }
      if (fi == n) {
        sig.zero += n - k;
        break;
      }
      for (std::size_t c = k; c < n; ++c) m[fi][c] += m[fj][c];
      for (std::size_t r = k; r < n; ++r) m[r][fi] += m[r][fj];
      p = fi;
    }
    if (p != k) {
      std::swap(m[p], m[k]);
      for (std::size_t r = 0; r < n; ++r) std::swap(m[r][p], m[r][k]);
    }

    const Rational d = m[k][k];
    if (d > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / d;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      for (std::size_t j = k; j < n; ++j) m[j][i] -= f * m[j][k];
    }
    ++k;
  }
  return sig;
}

namespace {

// Rank of a rational matrix by Gaussian elimination, used for the spanning
// check on polyhedral generators.
std::size_t matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> gram_as_rational(
    const std::vector<std::vector<Integer>>& gram) {
  std::vector<std::vector<Rational>> out(gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i) {
    out[i].reserve(gram[i].size());
    for (const Integer& g : gram[i]) out[i].emplace_back(g);
  }
  return out;
}

}  // namespace

Rational ValidatedSurface::pair(const DivisorClass& a, const DivisorClass& b) const {
  const std::size_t rho = data_.rank;
  if (a.dim() != rho || b.dim() != rho) {
    throw Error(Errc::DimensionMismatch,
                "pairing needs classes of dimension " + std::to_string(rho) +
                    ", got " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
  Rational out = 0;
  for (std::size_t i = 0; i < rho; ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rho; ++j) {
      if (b[j] == 0) continue;
      row += Rational(data_.gram[i][j]) * b[j];
    }
    out += a[i] * row;
  }
  return out;
}

bool ValidatedSurface::is_ample(const DivisorClass& a) const {
  if (a.dim() != data_.rank) {
    throw Error(Errc::DimensionMismatch,
                "ample test needs a class of dimension " +
                    std::to_string(data_.rank) + ", got " +
                    std::to_string(a.dim()));
  }

  if (data_.ample_mode == AmpleMode::PositiveCone) {
    return self_pair(a) > 0 && pair(a, data_.ample_reference) > 0;
  }

  // Polyhedral interior test: maximize t subject to
  //   sum_i d_i g_i + t * (sum_i g_i) = a,  t + u = 1,  d, t, u >= 0.
  // Every coefficient in the recovered combination is >= t, so the class is
  // interior exactly when the optimum is positive.
  const std::size_t rho = data_.rank;
  const std::size_t k = data_.ample_generators.size();
  std::vector<std::vector<Rational>> rows(rho + 1,
                                          std::vector<Rational>(k + 2));
  std::vector<Rational> rhs(rho + 1);
  for (std::size_t r = 0; r < rho; ++r) {
    Rational sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      rows[r][i] = data_.ample_generators[i][r];
      sum += data_.ample_generators[i][r];
    }
    rows[r][k] = sum;
    rhs[r] = a[r];
  }
  rows[rho][k] = 1;
  rows[rho][k + 1] = 1;
  rhs[rho] = 1;

  std::vector<Rational> cost(k + 2);
  cost[k] = 1;

  const lp::Result res = lp::maximize(cost, rows, rhs);
  return res.status == lp::Status::Optimal && res.objective > 0;
}

ValidatedSurface validate_surface(SurfaceData data) {
  std::vector<Violation> violations;
  const std::size_t rho = data.rank;

  if (rho == 0) {
    violations.push_back({Errc::NonpositiveRank, "Picard rank must be at least 1"});
  }

  bool gram_shaped = rho > 0 && data.gram.size() == rho;
  if (gram_shaped) {
    for (const auto& row : data.gram) {
      if (row.size() != rho) {
        gram_shaped = false;
        break;
      }
    }
  }
  if (rho > 0 && !gram_shaped) {
    violations.push_back(
        {Errc::DimensionMismatch,
         "Gram matrix must be " + std::to_string(rho) + "x" + std::to_string(rho)});
  }

  bool symmetric = gram_shaped;
  if (gram_shaped) {
    for (std::size_t i = 0; i < rho && symmetric; ++i) {
      for (std::size_t j = i + 1; j < rho; ++j) {
        if (data.gram[i][j] != data.gram[j][i]) {
          violations.push_back(
              {Errc::NonSymmetric,
               "Gram entries (" + std::to_string(i) + "," + std::to_string(j) +
                   ") and (" + std::to_string(j) + "," + std::to_string(i) +
                   ") differ: " + data.gram[i][j].str() + " vs " +
                   data.gram[j][i].str()});
          symmetric = false;
        }
      }
    }
  }

  Signature sig;
  bool lattice_ok = false;
  if (symmetric) {
    sig = sylvester_signature(gram_as_rational(data.gram));
    const Signature hyperbolic{1, rho - 1, 0};
    if (sig == hyperbolic) {
      lattice_ok = true;
    } else {
      violations.push_back({Errc::WrongSignature,
                            "Gram signature is " + to_string(sig) +
                                ", expected " + to_string(hyperbolic)});
    }
  }

  // Intersection pairing on the raw data, usable once the Gram shape holds.
  const auto raw_pair = [&](const DivisorClass& a, const DivisorClass& b) {
    Rational out = 0;
    for (std::size_t i = 0; i < rho; ++i) {
      for (std::size_t j = 0; j < rho; ++j) {
        out += a[i] * Rational(data.gram[i][j]) * b[j];
      }
    }
    return out;
  };

  bool cone_ok = false;
  DivisorClass reference = DivisorClass::zero(rho);
  if (data.ample_mode == AmpleMode::Polyhedral) {
    if (data.ample_generators.empty()) {
      violations.push_back(
          {Errc::EmptyAmpleCone, "polyhedral mode needs at least one generator"});
    } else {
      bool dims_ok = true;
      for (std::size_t i = 0; i < data.ample_generators.size(); ++i) {
        if (data.ample_generators[i].dim() != rho) {
          violations.push_back({Errc::DimensionMismatch,
                                "generator #" + std::to_string(i) +
                                    " has dimension " +
                                    std::to_string(data.ample_generators[i].dim())});
          dims_ok = false;
        }
      }
      if (dims_ok && gram_shaped) {
        cone_ok = true;
        for (std::size_t i = 0; i < data.ample_generators.size(); ++i) {
          for (std::size_t j = i; j < data.ample_generators.size(); ++j) {
            const Rational p =
                raw_pair(data.ample_generators[i], data.ample_generators[j]);
            if (p < 0) {
              violations.push_back(
                  {Errc::EmptyAmpleCone,
                   "generators #" + std::to_string(i) + " and #" +
                       std::to_string(j) + " pair to " + to_string(p) +
                       " < 0, so they cannot both be nef"});
              cone_ok = false;
            }
          }
        }
        std::vector<std::vector<Rational>> rows;
        rows.reserve(data.ample_generators.size());
        for (const DivisorClass& g : data.ample_generators) {
          rows.push_back(g.coords());
        }
        if (matrix_rank(std::move(rows)) != rho) {
          violations.push_back({Errc::EmptyAmpleCone,
                                "generators do not span the lattice, so the "
                                "cone has empty interior"});
          cone_ok = false;
        }
        if (cone_ok) {
          reference = DivisorClass::zero(rho);
          for (const DivisorClass& g : data.ample_generators) {
            reference = reference + g;
          }
        }
      }
    }
  } else {
    if (data.ample_reference.dim() != rho) {
      violations.push_back({Errc::DimensionMismatch,
                            "positive-cone reference has dimension " +
                                std::to_string(data.ample_reference.dim())});
    } else if (gram_shaped) {
      const Rational sq = raw_pair(data.ample_reference, data.ample_reference);
      if (sq > 0) {
        cone_ok = true;
        reference = data.ample_reference;
      } else {
        violations.push_back({Errc::EmptyAmpleCone,
                              "positive-cone reference has self-intersection " +
                                  to_string(sq) + " <= 0"});
      }
    }
  }

  ValidatedSurface out;
  out.data_ = std::move(data);
  out.signature_ = sig;
  out.reference_ample_ = std::move(reference);

  // Stable-character checks need a working lattice and cone, so they only
  // run when everything above passed.
  if (violations.empty() && lattice_ok && cone_ok) {
    const auto& chars = out.data_.stable_characters;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const std::string label = "stable character #" + std::to_string(i);
      const StableCharacter& sc = chars[i];
      if (sc.character.rank < 1) {
        violations.push_back(
            {Errc::NonpositiveRank,
             label + " has rank " + sc.character.rank.str()});
        continue;
      }
      if (sc.character.c1.dim() != rho) {
        violations.push_back({Errc::DimensionMismatch,
                              label + " has c1 of dimension " +
                                  std::to_string(sc.character.c1.dim())});
        continue;
      }
      const Rational delta = out.pair(sc.character.c1, sc.character.c1) -
                             2 * Rational(sc.character.rank) * sc.character.ch2;
      if (delta < 0) {
        violations.push_back({Errc::PreconditionViolated,
                              label + " violates the discriminant bound: " +
                                  to_string(delta) + " < 0"});
      }
      if (sc.applicability == Applicability::FixedPolarization) {
        if (sc.polarization.dim() != rho) {
          violations.push_back({Errc::DimensionMismatch,
                                label + " has polarization of dimension " +
                                    std::to_string(sc.polarization.dim())});
        } else if (!out.is_ample(sc.polarization)) {
          violations.push_back({Errc::NotAmple,
                                label + " has non-ample polarization " +
                                    to_string(sc.polarization)});
        }
      }
    }
  }

  if (!violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return out;
}

}  // namespace stabgeo
