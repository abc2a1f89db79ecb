#include "nlsb/initial_data.hpp"

#include <cmath>
#include <complex>

#include "nlsb/errors.hpp"

namespace nlsb {

namespace {

double sq(double x) { return x * x; }

double modulus_1d(ProfileKind kind, double x) {
  switch (kind) {
    case ProfileKind::single_gauss:
      return std::exp(-x * x);
    case ProfileKind::two_hump:
    case ProfileKind::asym_phase:
    case ProfileKind::two_hump_no_phase:
      return std::exp(-x * x) - 0.9 * std::exp(-3.0 * x * x);
    case ProfileKind::three_hump:
      return std::exp(-sq(3.0 * x)) + std::exp(-sq(3.0 * (x - 1.0))) +
             std::exp(-sq(3.0 * (x + 1.0)));
    case ProfileKind::two_up_one_down:
      return std::exp(-sq(3.0 * (x - 1.0))) - std::exp(-sq(3.0 * x)) +
             std::exp(-sq(3.0 * (x + 1.0)));
    case ProfileKind::odd_tanh:
      return std::exp(-x * x) * std::tanh(2.0 * x);
    case ProfileKind::asym_heights:
      return std::exp(-sq(x - 1.5)) + 0.99 * std::exp(-sq(x + 1.5));
    case ProfileKind::asym_two_hump_narrow:
      return std::exp(-sq(3.0 * x)) + std::exp(-sq(3.0 * (x - 1.5)));
    case ProfileKind::td_two_hump:
      break;
  }
  throw ConfigError("profile: kind is not one-dimensional");
}

}  // namespace

double log_2cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax));
}

PhaseKind default_phase(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::single_gauss:
    case ProfileKind::two_hump:
    case ProfileKind::three_hump:
    case ProfileKind::two_up_one_down:
    case ProfileKind::odd_tanh:
    case ProfileKind::asym_heights:
      return PhaseKind::log_cosh;
    case ProfileKind::asym_phase:
      return PhaseKind::log_cosh_shifted;
    case ProfileKind::asym_two_hump_narrow:
    case ProfileKind::two_hump_no_phase:
      return PhaseKind::none;
    case ProfileKind::td_two_hump:
      return PhaseKind::radial_log_cosh;
  }
  return PhaseKind::none;
}

int profile_dim(ProfileKind kind) {
  return kind == ProfileKind::td_two_hump ? 2 : 1;
}

void ProfileSpec::validate() const {
  if (!(amplitude >= 0.0))
    throw ConfigError("profile: amplitude must be >= 0");
  if (chirp_a && *chirp_a == 0.0)
    throw ConfigError("profile: chirp_a must be nonzero");

  const bool ok = [&] {
    switch (kind) {
      case ProfileKind::single_gauss:
        return phase == PhaseKind::none || phase == PhaseKind::log_cosh;
      case ProfileKind::two_hump:
      case ProfileKind::three_hump:
      case ProfileKind::two_up_one_down:
      case ProfileKind::odd_tanh:
      case ProfileKind::asym_heights:
        return phase == PhaseKind::log_cosh;
      case ProfileKind::asym_phase:
        return phase == PhaseKind::log_cosh_shifted;
      case ProfileKind::asym_two_hump_narrow:
      case ProfileKind::two_hump_no_phase:
        return phase == PhaseKind::none;
      case ProfileKind::td_two_hump:
        return phase == PhaseKind::radial_log_cosh;
    }
    return false;
  }();
  if (!ok)
    throw ConfigError("profile: phase '" + to_string(phase) +
                      "' is not valid for kind '" + to_string(kind) + "'");
}

ComplexField build_initial(const ProfileSpec& spec,
                           std::shared_ptr<const Grid> grid) {
  spec.validate();
  if (profile_dim(spec.kind) != grid->dim)
    throw ConfigError("profile: kind '" + to_string(spec.kind) +
                      "' needs a " + std::to_string(profile_dim(spec.kind)) +
                      "D grid");

  ComplexField f = make_field(grid);
  const int np = grid->points_per_dim;
  const double C = spec.amplitude;

  if (grid->dim == 1) {
    for (int i = 0; i < np; ++i) {
      const double x = grid->coord(i);
      double theta = 0.0;
      switch (spec.phase) {
        case PhaseKind::none: break;
        case PhaseKind::log_cosh: theta = -log_2cosh(x); break;
        case PhaseKind::log_cosh_shifted:
          theta = -log_2cosh(x - spec.phase_shift);
          break;
        case PhaseKind::radial_log_cosh: theta = -log_2cosh(x); break;
      }
      f.values[i] = std::polar(1.0, theta) * (C * modulus_1d(spec.kind, x));
    }
  } else {
    for (int ix = 0; ix < np; ++ix) {
      const double x = grid->coord(ix);
      const double gx = std::exp(-x * x) - 0.9 * std::exp(-3.0 * x * x);
      for (int iy = 0; iy < np; ++iy) {
        const double y = grid->coord(iy);
        const double r = std::hypot(x, y);
        const double mod = C * gx * std::exp(-y * y);
        f.values[grid->index2(ix, iy)] =
            std::polar(1.0, -log_2cosh(r)) * mod;
      }
    }
  }

  if (spec.chirp_a) apply_chirp(f, *spec.chirp_a);
  return f;
}

void apply_chirp(ComplexField& f, double a) {
  if (a == 0.0) throw ConfigError("chirp: a must be nonzero");
  const Grid& g = *f.grid;
  const int np = g.points_per_dim;
  const double inv4a = 1.0 / (4.0 * a);
  if (g.dim == 1) {
    for (int i = 0; i < np; ++i) {
      const double x = g.coord(i);
      f.values[i] *= std::polar(1.0, -x * x * inv4a);
    }
  } else {
    for (int ix = 0; ix < np; ++ix) {
      const double x2 = sq(g.coord(ix));
      for (int iy = 0; iy < np; ++iy) {
        const double r2 = x2 + sq(g.coord(iy));
        f.values[g.index2(ix, iy)] *= std::polar(1.0, -r2 * inv4a);
      }
    }
  }
}

ProfileKind profile_kind_from_name(const std::string& name) {
  if (name == "single_gauss") return ProfileKind::single_gauss;
  if (name == "two_hump") return ProfileKind::two_hump;
  if (name == "three_hump") return ProfileKind::three_hump;
  if (name == "two_up_one_down") return ProfileKind::two_up_one_down;
  if (name == "odd_tanh") return ProfileKind::odd_tanh;
  if (name == "asym_phase") return ProfileKind::asym_phase;
  if (name == "asym_heights") return ProfileKind::asym_heights;
  if (name == "asym_two_hump_narrow") return ProfileKind::asym_two_hump_narrow;
  if (name == "two_hump_no_phase") return ProfileKind::two_hump_no_phase;
  if (name == "td_two_hump") return ProfileKind::td_two_hump;
  throw ConfigError("profile: unknown kind '" + name + "'");
}

PhaseKind phase_kind_from_name(const std::string& name) {
  if (name == "none") return PhaseKind::none;
  if (name == "log_cosh") return PhaseKind::log_cosh;
  if (name == "log_cosh_shifted") return PhaseKind::log_cosh_shifted;
  if (name == "radial_log_cosh") return PhaseKind::radial_log_cosh;
  throw ConfigError("profile: unknown phase '" + name + "'");
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::single_gauss: return "single_gauss";
    case ProfileKind::two_hump: return "two_hump";
    case ProfileKind::three_hump: return "three_hump";
    case ProfileKind::two_up_one_down: return "two_up_one_down";
    case ProfileKind::odd_tanh: return "odd_tanh";
    case ProfileKind::asym_phase: return "asym_phase";
    case ProfileKind::asym_heights: return "asym_heights";
    case ProfileKind::asym_two_hump_narrow: return "asym_two_hump_narrow";
    case ProfileKind::two_hump_no_phase: return "two_hump_no_phase";
    case ProfileKind::td_two_hump: return "td_two_hump";
  }
  return "?";
}

std::string to_string(PhaseKind phase) {
  switch (phase) {
    case PhaseKind::none: return "none";
    case PhaseKind::log_cosh: return "log_cosh";
    case PhaseKind::log_cosh_shifted: return "log_cosh_shifted";
    case PhaseKind::radial_log_cosh: return "radial_log_cosh";
  }
  return "?";
}

}  // namespace nlsb
