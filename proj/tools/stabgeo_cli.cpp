#include "stabgeo/contraction.hpp"
#include "stabgeo/errors.hpp"
#include "stabgeo/lepotier.hpp"
#include "stabgeo/region.hpp"
#include "stabgeo/surface_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace stabgeo;

constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_unknown = 2;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;

// Command-line values that fail to convert are usage errors (exit 64);
// anything wrong inside a surface file stays a data error (exit 65).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational arg_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == sep) {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

DivisorClass arg_divisor(const std::string& text, const char* flag) {
  std::vector<Rational> coords;
  for (const std::string& part : split(text, ',')) {
    coords.push_back(arg_rational(part, flag));
  }
  return DivisorClass(std::move(coords));
}

// Reals are exact by default; a leading '~' asks for outward rounding onto
// the dyadic grid, for values that are only known approximately.
Enclosure arg_real(const std::string& text, unsigned bits, const char* flag) {
  if (!text.empty() && text.front() == '~') {
    const Rational exact = arg_rational(text.substr(1), flag);
    return Enclosure(floor_to_grid(exact, bits), ceil_to_grid(exact, bits));
  }
  return Enclosure(arg_rational(text, flag));
}

std::vector<Rational> arg_grid(const std::string& text) {
  std::vector<Rational> grid;
  for (const std::string& part : split(text, ',')) {
    grid.push_back(arg_rational(part, "--grid"));
  }
  return grid;
}

Convention arg_convention(const std::string& text) {
  if (text == "closed") return Convention::Closed;
  if (text == "punctured") return Convention::Punctured;
  throw UsageError("--convention must be 'closed' or 'punctured'");
}

ChernCharacter arg_character(const std::string& text, const char* flag) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) {
    throw UsageError(std::string(flag) +
                     ": expected 'rank:c1,c1,...:ch2', got '" + text + "'");
  }
  ChernCharacter v;
  const Rational rank = arg_rational(parts[0], flag);
  if (denominator(rank) != 1) {
    throw UsageError(std::string(flag) + ": rank must be an integer");
  }
  v.rank = numerator(rank);
  v.c1 = arg_divisor(parts[1], flag);
  v.ch2 = arg_rational(parts[2], flag);
  return v;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_coords(const DivisorClass& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i > 0) out += ';';
    out += to_string(a[i]);
  }
  return out;
}

// Three CSV cells describing an optional witness character.
std::string witness_cells(const std::optional<ChernCharacter>& w) {
  if (!w) return ",,";
  return w->rank.str() + "," + csv_coords(w->c1) + "," + to_string(w->ch2);
}

std::string witness_text(const std::optional<ChernCharacter>& w) {
  return w ? to_string(*w) : "none";
}

ValidatedSurface load_validated(const std::string& path) {
  return validate_surface(load_surface_file(path));
}

// Shared flags describing a parameter-space point.
struct PointFlags {
  std::string lambda = "0,0";
  std::string h;
  std::string d;
  std::string beta = "0";
  std::string alpha = "0";

  void attach(CLI::App* cmd, bool with_alpha_flag = true) {
    cmd->add_option("--lambda", lambda,
                    "deck parameter as 're,im' (default 0,0)");
    cmd->add_option("--H", h, "polarization class 'a,b,...'")->required();
    cmd->add_option("--D", d, "twist class 'a,b,...' (default 0)");
    cmd->add_option("--beta", beta, "slope coordinate (exact rational)");
    if (with_alpha_flag) {
      cmd->add_option("--alpha", alpha, "height coordinate (exact rational)");
    }
  }

  GeoPoint to_point(const ValidatedSurface& s) const {
    GeoPoint p;
    const std::vector<std::string> parts = split(lambda, ',');
    if (parts.size() > 2) {
      throw UsageError("--lambda: expected 're' or 're,im'");
    }
    p.lambda.re = arg_rational(parts[0], "--lambda");
    p.lambda.im = parts.size() == 2 ? arg_rational(parts[1], "--lambda")
                                    : Rational(0);
    p.h = arg_divisor(h, "--H");
    p.d = d.empty() ? DivisorClass::zero(s.picard_rank())
                    : arg_divisor(d, "--D");
    p.beta = arg_rational(beta, "--beta");
    p.alpha = arg_rational(alpha, "--alpha");
    return p;
  }
};

struct BoxFlags {
  long coordinate_bound = 5;
  long max_rank = 8;

  void attach(CLI::App* cmd) {
    cmd->add_option("--box", coordinate_bound,
                    "line-bundle coordinate bound")
        ->capture_default_str();
    cmd->add_option("--max-rank", max_rank,
                    "largest declared-character rank to use")
        ->capture_default_str();
  }

  EnumerationBox to_box() const {
    return EnumerationBox{coordinate_bound, max_rank};
  }
};

void print_bracket(const PhiBracket& bracket) {
  std::cout << "upper bound: " << to_string(bracket.upper) << "\n";
  std::cout << "pointwise:   " << to_string(bracket.pointwise.value);
  if (bracket.pointwise.witness) {
    std::cout << "  witness " << witness_text(bracket.pointwise.witness);
  }
  std::cout << "\n";
  for (const WindowEntry& w : bracket.windows) {
    std::cout << "delta = " << to_string(w.delta) << ": sup = "
              << to_string(w.sup);
    if (w.witness) {
      std::cout << "  witness " << witness_text(w.witness);
    }
    std::cout << "\n";
  }
  std::cout << "estimate (" << to_string(bracket.convention)
            << "): " << to_string(bracket.headline) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical model of the geometric chamber of stability conditions on "
      "a surface"};
  app.require_subcommand(1);
  app.fallthrough();  // let subcommands see --precision
  app.set_version_flag("--version", "stabgeo 1.0.0");

  unsigned precision = Enclosure::default_bits;
  app.add_option("--precision", precision,
                 "bits for outward rounding of ~approximate reals")
      ->capture_default_str();

  int result = exit_ok;

  // validate ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "validate", "Check a surface description and report its invariants");
    auto path = std::make_shared<std::string>();
    cmd->add_option("surface", *path, "surface file (.json or .toml)")
        ->required();
    cmd->callback([path]() {
      const ValidatedSurface s = load_validated(*path);
      std::cout << "surface: " << *path << "\n";
      std::cout << "rank: " << s.picard_rank() << "\n";
      std::cout << "signature: " << to_string(s.signature()) << "\n";
      if (s.ample_mode() == AmpleMode::Polyhedral) {
        std::cout << "ample cone: polyhedral with "
                  << s.data().ample_generators.size() << " generators\n";
      } else {
        std::cout << "ample cone: positive cone against reference "
                  << to_string(s.data().ample_reference) << "\n";
      }
      std::cout << "reference ample class: " << to_string(s.reference_ample())
                << "\n";
      std::cout << "stable characters: " << s.stable_characters().size()
                << "\n";
      if (s.data().albanese_finite) {
        std::cout << "albanese finite: "
                  << (*s.data().albanese_finite ? "true" : "false") << "\n";
      }
      std::cout << "ok\n";
    });
  }

  // phi --------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "phi", "Bracket the slope-limit function at one slope");
    struct Opts {
      std::string surface;
      std::string h;
      std::string d;
      std::string beta;
      std::string grid = "1,1/2,1/4";
      std::string convention = "closed";
      BoxFlags box;
      bool csv = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--surface", o->surface, "surface file")->required();
    cmd->add_option("--H", o->h, "polarization class")->required();
    cmd->add_option("--D", o->d, "twist class (default 0)");
    cmd->add_option("--beta", o->beta, "slope (prefix ~ for approximate)")
        ->required();
    cmd->add_option("--grid", o->grid, "decreasing window half-widths")
        ->capture_default_str();
    cmd->add_option("--convention", o->convention, "closed or punctured")
        ->capture_default_str();
    o->box.attach(cmd);
    cmd->add_flag("--csv", o->csv, "emit the window profile as CSV");
    cmd->callback([o, &precision]() {
      const ValidatedSurface s = load_validated(o->surface);
      const DivisorClass h = arg_divisor(o->h, "--H");
      const DivisorClass d = o->d.empty()
                                 ? DivisorClass::zero(s.picard_rank())
                                 : arg_divisor(o->d, "--D");
      const Enclosure beta = arg_real(o->beta, precision, "--beta");
      const PhiBracket bracket =
          phi_profile(s, h, d, beta, o->box.to_box(), arg_grid(o->grid),
                      arg_convention(o->convention));
      if (o->csv) {
        std::cout << "delta,punctured_sup,witness_rank,witness_c1,witness_ch2\n";
        for (const WindowEntry& w : bracket.windows) {
          std::cout << to_string(w.delta) << "," << to_string(w.sup) << ","
                    << witness_cells(w.witness) << "\n";
        }
        return;
      }
      std::cout << "beta = " << to_string(beta) << "\n";
      print_bracket(bracket);
    });
  }

  // member -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "member", "Decide membership of a point in the geometric region");
    struct Opts {
      std::string surface;
      PointFlags point;
      BoxFlags box;
      std::string grid = "1,1/2,1/4";
      std::string convention = "closed";
      bool csv = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--surface", o->surface, "surface file")->required();
    o->point.attach(cmd);
    o->box.attach(cmd);
    cmd->add_option("--grid", o->grid, "decreasing window half-widths")
        ->capture_default_str();
    cmd->add_option("--convention", o->convention, "closed or punctured")
        ->capture_default_str();
    cmd->add_flag("--csv", o->csv, "emit the verdict as one CSV row");
    cmd->callback([o, &result]() {
      const ValidatedSurface s = load_validated(o->surface);
      const GeoPoint p = o->point.to_point(s);
      const Membership m =
          membership(s, p, o->box.to_box(), arg_grid(o->grid),
                     arg_convention(o->convention));
      if (o->csv) {
        std::cout << "verdict,alpha,upper,pointwise,witness_rank,witness_c1,"
                     "witness_ch2,convention\n";
        std::cout << to_string(m.verdict) << "," << to_string(m.alpha) << ","
                  << to_string(m.upper) << "," << to_string(m.pointwise.value)
                  << "," << witness_cells(m.pointwise.witness) << ","
                  << to_string(m.convention) << "\n";
      } else {
        std::cout << "verdict: " << to_string(m.verdict) << "\n";
        switch (m.verdict) {
          case Verdict::Inside:
            std::cout << "certificate: alpha = " << to_string(m.alpha)
                      << " > upper bound " << to_string(m.upper) << "\n";
            break;
          case Verdict::Outside:
            std::cout << "certificate: alpha = " << to_string(m.alpha)
                      << " <= pointwise value "
                      << to_string(m.pointwise.value) << " of candidate "
                      << witness_text(m.pointwise.witness) << "\n";
            break;
          case Verdict::Unknown:
            std::cout << "bracket did not separate alpha = "
                      << to_string(m.alpha) << ":\n";
            print_bracket(m.bracket);
            break;
        }
      }
      if (m.verdict == Verdict::Outside) result = exit_no;
      if (m.verdict == Verdict::Unknown) result = exit_unknown;
    });
  }

  // charge -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "charge", "Evaluate the central charge of a character at a point");
    struct Opts {
      std::string surface;
      std::string character;
      PointFlags point;
      bool csv = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--surface", o->surface, "surface file")->required();
    o->point.attach(cmd);
    cmd->add_option("--char", o->character, "character 'rank:c1,...:ch2'")
        ->required();
    cmd->add_flag("--csv", o->csv, "emit one CSV row");
    cmd->callback([o]() {
      const ValidatedSurface s = load_validated(o->surface);
      const GeoPoint p = o->point.to_point(s);
      const ChernCharacter v = arg_character(o->character, "--char");
      const CentralCharge z = central_charge(s, p, v);
      const std::complex<double> numeric = z.value();
      if (o->csv) {
        std::cout << "re0,im0,lambda_re,lambda_im,value_re,value_im\n";
        std::cout << to_string(z.re0) << "," << to_string(z.im0) << ","
                  << to_string(z.lambda.re) << "," << to_string(z.lambda.im)
                  << "," << fmt_double(numeric.real()) << ","
                  << fmt_double(numeric.imag()) << "\n";
        return;
      }
      std::cout << "character: " << to_string(v) << "\n";
      std::cout << "base charge: " << to_string(RationalComplex{z.re0, z.im0})
                << "\n";
      std::cout << "deck parameter: " << to_string(z.lambda) << "\n";
      std::cout << "value: " << fmt_double(numeric.real()) << " + "
                << fmt_double(numeric.imag()) << "i\n";
    });
  }

  // contract ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "contract", "Build and verify an explicit contraction path");
    struct Opts {
      std::string surface;
      PointFlags point;
      long steps = 16;
      bool allow_uncertified = false;
      bool csv = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--surface", o->surface, "surface file")->required();
    o->point.attach(cmd);
    cmd->add_option("--steps", o->steps, "samples per phase")
        ->capture_default_str();
    cmd->add_flag("--allow-uncertified", o->allow_uncertified,
                  "skip the membership certificate on the start point");
    cmd->add_flag("--csv", o->csv, "emit the sampled path as CSV");
    cmd->callback([o, &result]() {
      const ValidatedSurface s = load_validated(o->surface);
      const GeoPoint p = o->point.to_point(s);
      ContractOptions opts;
      opts.allow_uncertified = o->allow_uncertified;
      const ContractionPath path = contract(s, p, o->steps, opts);
      const PathReport report = verify_path(s, path);

      if (o->csv) {
        const std::size_t rho = s.picard_rank();
        std::cout << "t,phase,lambda_re,lambda_im";
        for (std::size_t i = 0; i < rho; ++i) std::cout << ",h_" << i;
        for (std::size_t i = 0; i < rho; ++i) std::cout << ",d_" << i;
        std::cout << ",beta,alpha\n";
        for (const PathSample& sample : path.samples) {
          const GeoPoint& pt = sample.point;
          std::cout << to_string(sample.t) << "," << to_string(sample.phase)
                    << "," << to_string(pt.lambda.re) << ","
                    << to_string(pt.lambda.im);
          for (std::size_t i = 0; i < rho; ++i) {
            std::cout << "," << to_string(pt.h[i]);
          }
          for (std::size_t i = 0; i < rho; ++i) {
            std::cout << "," << to_string(pt.d[i]);
          }
          std::cout << "," << to_string(pt.beta) << ","
                    << to_string(pt.alpha) << "\n";
        }
      } else {
        std::cout << "samples: " << path.samples.size() << " over three phases\n";
        std::cout << "start:  alpha = " << to_string(p.alpha) << " at beta = "
                  << to_string(p.beta) << ", H = " << to_string(p.h) << "\n";
        std::cout << "base:   alpha = " << to_string(path.base_point.alpha)
                  << " at H = " << to_string(path.base_point.h) << "\n";
        std::cout << "max step jump: " << to_string(report.max_step_jump)
                  << "\n";
      }

      std::ostream& diag = o->csv ? std::cerr : std::cout;
      if (report.ok()) {
        diag << "verification: ok (" << path.samples.size() << " samples)\n";
      } else {
        diag << "verification: FAILED\n";
        for (const PathViolation& v : report.violations) {
          diag << "  sample " << v.sample << " [" << v.check
               << "]: " << v.detail << "\n";
        }
        result = exit_no;
      }
    });
  }

  // slice ------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "slice", "CSV table of the bracket along a beta range");
    struct Opts {
      std::string surface;
      std::string h;
      std::string d;
      std::string beta_min = "-2";
      std::string beta_max = "2";
      std::string step = "1/4";
      BoxFlags box;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--surface", o->surface, "surface file")->required();
    cmd->add_option("--H", o->h, "polarization class")->required();
    cmd->add_option("--D", o->d, "twist class (default 0)");
    cmd->add_option("--beta-min", o->beta_min, "range start")
        ->capture_default_str();
    cmd->add_option("--beta-max", o->beta_max, "range end")
        ->capture_default_str();
    cmd->add_option("--step", o->step, "range step")->capture_default_str();
    o->box.attach(cmd);
    cmd->callback([o]() {
      const ValidatedSurface s = load_validated(o->surface);
      const DivisorClass h = arg_divisor(o->h, "--H");
      const DivisorClass d = o->d.empty()
                                 ? DivisorClass::zero(s.picard_rank())
                                 : arg_divisor(o->d, "--D");
      const Rational lo = arg_rational(o->beta_min, "--beta-min");
      const Rational hi = arg_rational(o->beta_max, "--beta-max");
      const Rational step = arg_rational(o->step, "--step");
      if (step <= 0) throw UsageError("--step must be positive");
      if (hi < lo) throw UsageError("--beta-max must be >= --beta-min");
      const EnumerationBox box = o->box.to_box();
      std::cout << "beta,phi_upper,phi_pointwise,witness_rank,witness_c1,"
                   "witness_ch2\n";
      for (Rational b = lo; b <= hi; b += step) {
        const Rational upper = phi_upper(s, h, d, b);
        const PointwiseSup sup = phi_at_slope(s, h, d, b, box);
        std::cout << to_string(b) << "," << to_string(upper) << ","
                  << to_string(sup.value) << "," << witness_cells(sup.witness)
                  << "\n";
      }
    });
  }

  // pinch-demo ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "pinch-demo",
        "Connectivity of the sampled pinch region, the counterexample to "
        "fiberwise contraction");
    struct Opts {
      std::string window = "-2,2,-3,3";
      std::string spacing = "0.05";
      bool csv = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--window", o->window, "x0,x1,alpha0,alpha1")
        ->capture_default_str();
    cmd->add_option("--spacing", o->spacing, "grid spacing")
        ->capture_default_str();
    cmd->add_flag("--csv", o->csv, "emit representatives as CSV");
    cmd->callback([o]() {
      const std::vector<std::string> parts = split(o->window, ',');
      if (parts.size() != 4) {
        throw UsageError("--window: expected 'x0,x1,alpha0,alpha1'");
      }
      const double x0 =
          static_cast<double>(arg_rational(parts[0], "--window"));
      const double x1 =
          static_cast<double>(arg_rational(parts[1], "--window"));
      const double a0 =
          static_cast<double>(arg_rational(parts[2], "--window"));
      const double a1 =
          static_cast<double>(arg_rational(parts[3], "--window"));
      const double spacing =
          static_cast<double>(arg_rational(o->spacing, "--spacing"));
      const PinchRegion region = pinch_demo(x0, x1, a0, a1, spacing);
      if (o->csv) {
        std::cout << "component,x,alpha\n";
        for (const auto& rep : region.representatives) {
          std::cout << rep.component << "," << fmt_double(rep.x) << ","
                    << fmt_double(rep.alpha) << "\n";
        }
        return;
      }
      std::cout << "grid: " << region.nx << " x " << region.na << " samples\n";
      std::cout << "components: " << region.component_count << "\n";
      for (const auto& rep : region.representatives) {
        std::cout << "component " << rep.component << ": x = "
                  << fmt_double(rep.x) << ", alpha = " << fmt_double(rep.alpha)
                  << "\n";
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  }
  return result;
}
