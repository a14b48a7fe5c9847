#include "stabgeo/contraction.hpp"

#include "stabgeo/lepotier.hpp"

#include <cmath>
#include <numeric>

namespace stabgeo {

BaseCoordinate base_of(const GeoPoint& p) {
  return BaseCoordinate{p.lambda, p.h, p.d, p.beta};
}

GeoPoint with_alpha(BaseCoordinate z, Rational alpha) {
  return GeoPoint{std::move(z.lambda), std::move(z.h), std::move(z.d),
                  std::move(z.beta), std::move(alpha)};
}

Rational g_majorant(const ValidatedSurface& s, const BaseCoordinate& z) {
  return phi_upper(s, z.h, z.d, z.beta) + 1;
}

BaseCoordinate base_contraction(const BaseCoordinate& z, const Rational& t,
                                const BaseCoordinate& z0) {
  if (t < 0 || t > 1) {
    throw Error(Errc::BadParameter,
                "contraction time " + to_string(t) + " outside [0, 1]");
  }
  const Rational u = 1 - t;
  BaseCoordinate out;
  out.lambda = RationalComplex{u * z.lambda.re + t * z0.lambda.re,
                               u * z.lambda.im + t * z0.lambda.im};
  out.h = u * z.h + t * z0.h;
  out.d = u * z.d + t * z0.d;
  out.beta = u * z.beta + t * z0.beta;
  return out;
}

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Lift: return "lift";
    case Phase::Graph: return "graph";
    case Phase::Base: return "base";
  }
  return "base";
}

namespace {

void check_point_shape(const ValidatedSurface& s, const GeoPoint& p,
                       const char* label) {
  if (p.h.dim() != s.picard_rank() || p.d.dim() != s.picard_rank()) {
    throw Error(Errc::DimensionMismatch,
                std::string(label) + " classes must have dimension " +
                    std::to_string(s.picard_rank()));
  }
  if (!s.is_ample(p.h)) {
    throw Error(Errc::NotAmple, std::string(label) + " polarization " +
                                    to_string(p.h) + " is not ample");
  }
}

GeoPoint canonical_base(const ValidatedSurface& s) {
  BaseCoordinate z;
  z.lambda = RationalComplex{Rational(0), Rational(0)};
  z.h = s.reference_ample();
  z.d = DivisorClass::zero(s.picard_rank());
  z.beta = 0;
  return with_alpha(z, g_majorant(s, z));
}

}  // namespace

ContractionPath contract(const ValidatedSurface& s, const GeoPoint& start,
                         long steps_per_phase, const ContractOptions& opts) {
  if (steps_per_phase < 1) {
    throw Error(Errc::BadParameter, "steps per phase must be at least 1");
  }
  check_point_shape(s, start, "start");

  const Rational upper = phi_upper(s, start.h, start.d, start.beta);
  if (!opts.allow_uncertified && !(start.alpha > upper)) {
    throw Error(Errc::NotInside,
                "start alpha " + to_string(start.alpha) +
                    " does not clear the bound " + to_string(upper) +
                    "; no membership certificate");
  }

  const GeoPoint base = opts.base ? *opts.base : canonical_base(s);
  check_point_shape(s, base, "base");
  const BaseCoordinate base_z = base_of(base);
  if (base.alpha != g_majorant(s, base_z)) {
    throw Error(Errc::BadParameter,
                "base point must sit on the majorant graph: alpha = " +
                    to_string(base.alpha) + ", majorant = " +
                    to_string(g_majorant(s, base_z)));
  }

  const BaseCoordinate z = base_of(start);
  const Rational g_start = g_majorant(s, z);
  const Rational alpha0 = start.alpha;
  const Rational steps(steps_per_phase);
  const Rational total = 3 * steps;

  ContractionPath path;
  path.base_point = base;
  path.samples.reserve(static_cast<std::size_t>(3 * steps_per_phase));

  for (long k = 0; k < steps_per_phase; ++k) {
    const Rational local = Rational(k) / steps;
    path.samples.push_back(PathSample{
        Rational(k) / total, Phase::Lift,
        with_alpha(z, lift_homotopy(alpha0, g_start, local))});
  }

  const Rational lifted = std::max(alpha0, g_start);
  for (long k = 0; k < steps_per_phase; ++k) {
    const Rational local = Rational(k) / steps;
    path.samples.push_back(PathSample{
        Rational(steps_per_phase + k) / total, Phase::Graph,
        with_alpha(z, graph_homotopy(lifted, g_start, local))});
  }

  for (long k = 1; k <= steps_per_phase; ++k) {
    const Rational local = Rational(k) / steps;
    const BaseCoordinate moved = base_contraction(z, local, base_z);
    path.samples.push_back(PathSample{
        Rational(2 * steps_per_phase + k) / total, Phase::Base,
        with_alpha(moved, g_majorant(s, moved))});
  }

  return path;
}

namespace {

Rational point_distance(const GeoPoint& a, const GeoPoint& b) {
  Rational out = abs(a.lambda.re - b.lambda.re);
  out = std::max(out, abs(a.lambda.im - b.lambda.im));
  for (std::size_t i = 0; i < a.h.dim(); ++i) {
    out = std::max(out, abs(a.h[i] - b.h[i]));
  }
  for (std::size_t i = 0; i < a.d.dim(); ++i) {
    out = std::max(out, abs(a.d[i] - b.d[i]));
  }
  out = std::max(out, abs(a.beta - b.beta));
  out = std::max(out, abs(a.alpha - b.alpha));
  return out;
}

bool same_base(const GeoPoint& a, const GeoPoint& b) {
  return a.lambda == b.lambda && a.h == b.h && a.d == b.d && a.beta == b.beta;
}

}  // namespace

PathReport verify_path(const ValidatedSurface& s, const ContractionPath& path,
                       const Rational& endpoint_tolerance) {
  if (path.samples.empty()) {
    throw Error(Errc::BadParameter, "path has no samples");
  }
  if (endpoint_tolerance < 0) {
    throw Error(Errc::BadParameter, "endpoint tolerance must be nonnegative");
  }
  for (const PathSample& sample : path.samples) {
    if (sample.point.h.dim() != s.picard_rank() ||
        sample.point.d.dim() != s.picard_rank()) {
      throw Error(Errc::DimensionMismatch,
                  "path sample classes must have dimension " +
                      std::to_string(s.picard_rank()));
    }
  }

  PathReport report;
  const auto flag = [&](std::size_t i, const char* check, std::string detail) {
    report.violations.push_back(PathViolation{i, check, std::move(detail)});
  };

  const GeoPoint& first = path.samples.front().point;
  int max_phase_seen = 0;
  std::optional<Rational> prev_lift_alpha;

  for (std::size_t i = 0; i < path.samples.size(); ++i) {
    const PathSample& sample = path.samples[i];
    const GeoPoint& pt = sample.point;

    if (sample.t < 0 || sample.t > 1) {
      flag(i, "t_range", "t = " + to_string(sample.t));
    }
    if (i > 0 && !(path.samples[i - 1].t < sample.t)) {
      flag(i, "t_order", "t = " + to_string(sample.t) + " after t = " +
                             to_string(path.samples[i - 1].t));
    }

    const int phase_rank = static_cast<int>(sample.phase);
    if (phase_rank < max_phase_seen) {
      flag(i, "phase_order", to_string(sample.phase) + " after " +
                                 to_string(static_cast<Phase>(max_phase_seen)));
    }
    max_phase_seen = std::max(max_phase_seen, phase_rank);

    switch (sample.phase) {
      case Phase::Lift: {
        if (!same_base(pt, first)) {
          flag(i, "frozen_base", "base coordinates moved during lift");
        }
        const Rational& floor_alpha =
            prev_lift_alpha ? *prev_lift_alpha : first.alpha;
        if (pt.alpha < floor_alpha) {
          flag(i, "lift_monotone", "alpha = " + to_string(pt.alpha) +
                                       " below " + to_string(floor_alpha));
        }
        prev_lift_alpha = pt.alpha;
        break;
      }
      case Phase::Graph: {
        if (!same_base(pt, first)) {
          flag(i, "frozen_base", "base coordinates moved during graph phase");
        }
        const Rational g = g_majorant(s, base_of(pt));
        if (pt.alpha < g) {
          flag(i, "graph_majorant", "alpha = " + to_string(pt.alpha) +
                                        " below majorant " + to_string(g));
        }
        break;
      }
      case Phase::Base: {
        const Rational g = g_majorant(s, base_of(pt));
        if (pt.alpha != g) {
          flag(i, "base_majorant", "alpha = " + to_string(pt.alpha) +
                                       " off majorant " + to_string(g));
        }
        if (!s.is_ample(pt.h)) {
          flag(i, "base_ample",
               "polarization " + to_string(pt.h) + " left the ample cone");
        }
        break;
      }
    }

    if (i > 0) {
      report.max_step_jump = std::max(
          report.max_step_jump,
          point_distance(path.samples[i - 1].point, pt));
    }
  }

  // The polarization is frozen during the fiberwise phases, so one ample
  // check on the first sample covers them all.
  if (path.samples.front().phase != Phase::Base &&
      !s.is_ample(first.h)) {
    flag(0, "ample", "polarization " + to_string(first.h) + " is not ample");
  }

  const Rational endpoint_gap =
      point_distance(path.samples.back().point, path.base_point);
  report.endpoint_matches = endpoint_gap <= endpoint_tolerance;
  if (!report.endpoint_matches) {
    flag(path.samples.size() - 1, "endpoint",
         "gap to base point is " + to_string(endpoint_gap));
  }
  return report;
}

double PinchRegion::x_at(std::size_t ix) const {
  if (nx <= 1) return x0;
  const double n = static_cast<double>(nx - 1);
  return ((n - static_cast<double>(ix)) * x0 + static_cast<double>(ix) * x1) / n;
}

double PinchRegion::alpha_at(std::size_t ia) const {
  if (na <= 1) return alpha0;
  const double n = static_cast<double>(na - 1);
  return ((n - static_cast<double>(ia)) * alpha0 +
          static_cast<double>(ia) * alpha1) /
         n;
}

int PinchRegion::component_at(std::size_t ix, std::size_t ia) const {
  return component[ix * na + ia];
}

namespace {

// Plain union-find over grid cells with path halving.
class DisjointSet {
public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

double pinch_profile(double x) { return x == 0.0 ? 0.0 : 1.0 / x; }

}  // namespace

PinchRegion pinch_demo(double x0, double x1, double alpha0, double alpha1,
                       double spacing) {
  if (!(spacing > 0) || !std::isfinite(spacing)) {
    throw Error(Errc::BadParameter, "spacing must be positive");
  }
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(alpha0) ||
      !std::isfinite(alpha1) || x1 < x0 || alpha1 < alpha0) {
    throw Error(Errc::BadParameter, "window bounds out of order");
  }

  PinchRegion region;
  region.x0 = x0;
  region.x1 = x1;
  region.alpha0 = alpha0;
  region.alpha1 = alpha1;
  region.nx = static_cast<std::size_t>(std::llround((x1 - x0) / spacing)) + 1;
  region.na =
      static_cast<std::size_t>(std::llround((alpha1 - alpha0) / spacing)) + 1;

  const std::size_t cells = region.nx * region.na;
  std::vector<bool> inside(cells);
  for (std::size_t ix = 0; ix < region.nx; ++ix) {
    const double f = pinch_profile(region.x_at(ix));
    for (std::size_t ia = 0; ia < region.na; ++ia) {
      inside[ix * region.na + ia] = region.alpha_at(ia) > f;
    }
  }

  DisjointSet sets(cells);
  for (std::size_t ix = 0; ix < region.nx; ++ix) {
    for (std::size_t ia = 0; ia < region.na; ++ia) {
      const std::size_t cell = ix * region.na + ia;
      if (!inside[cell]) continue;
      if (ix > 0 && inside[cell - region.na]) sets.unite(cell, cell - region.na);
      if (ia > 0 && inside[cell - 1]) sets.unite(cell, cell - 1);
    }
  }

  region.component.assign(cells, -1);
  std::vector<int> root_label(cells, -1);
  for (std::size_t ix = 0; ix < region.nx; ++ix) {
    for (std::size_t ia = 0; ia < region.na; ++ia) {
      const std::size_t cell = ix * region.na + ia;
      if (!inside[cell]) continue;
      const std::size_t root = sets.find(cell);
      if (root_label[root] < 0) {
        root_label[root] = region.component_count++;
        region.representatives.push_back(PinchRegion::Representative{
            root_label[root], region.x_at(ix), region.alpha_at(ia)});
      }
      region.component[cell] = root_label[root];
    }
  }
  return region;
}

}  // namespace stabgeo
