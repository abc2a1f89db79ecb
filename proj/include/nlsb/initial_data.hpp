#pragma once

#include <optional>
#include <string>

#include "nlsb/grid.hpp"

namespace nlsb {

// Catalog of initial profiles. Moduli (C is the amplitude):
//   single_gauss          C exp(-x^2)
//   two_hump              C (exp(-x^2) - 0.9 exp(-3x^2))
//   three_hump            C (exp(-(3x)^2) + exp(-(3(x-1))^2) + exp(-(3(x+1))^2))
//   two_up_one_down       C (exp(-(3(x-1))^2) - exp(-(3x)^2) + exp(-(3(x+1))^2))
//   odd_tanh              C exp(-x^2) tanh(2x)
//   asym_phase            two_hump modulus, shifted phase
//   asym_heights          C (exp(-(x-1.5)^2) + 0.99 exp(-(x+1.5)^2))
//   asym_two_hump_narrow  C (exp(-(3x)^2) + exp(-(3(x-1.5))^2))
//   two_hump_no_phase     two_hump modulus, no phase
//   td_two_hump           C (exp(-x^2) - 0.9 exp(-3x^2)) exp(-y^2)   [2D]
enum class ProfileKind {
  single_gauss,
  two_hump,
  three_hump,
  two_up_one_down,
  odd_tanh,
  asym_phase,
  asym_heights,
  asym_two_hump_narrow,
  two_hump_no_phase,
  td_two_hump,
};

// Multiplicative phase factors:
//   log_cosh           exp(-i log(e^x + e^{-x})) = exp(-i log(2 cosh x))
//   log_cosh_shifted   exp(-i log(2 cosh(x - s)))
//   radial_log_cosh    exp(-i log(2 cosh r)), r = sqrt(x^2 + y^2)   [2D]
enum class PhaseKind { none, log_cosh, log_cosh_shifted, radial_log_cosh };

struct ProfileSpec {
  ProfileKind kind = ProfileKind::single_gauss;
  double amplitude = 1.0;       // C >= 0
  PhaseKind phase = PhaseKind::none;
  double phase_shift = 0.0;     // s, log_cosh_shifted only
  std::optional<double> chirp_a;  // adds exp(-i|x|^2/(4a)), a != 0

  // Validates the kind/phase combination and fills the kind's default phase
  // when `phase` is left unset by the caller (see default_phase).
  void validate() const;
};

PhaseKind default_phase(ProfileKind kind);
int profile_dim(ProfileKind kind);  // 1 or 2

ProfileKind profile_kind_from_name(const std::string& name);
PhaseKind phase_kind_from_name(const std::string& name);
std::string to_string(ProfileKind kind);
std::string to_string(PhaseKind phase);

// Samples the closed-form profile (phase and optional chirp included) on the
// grid. The grid dimension must match the kind.
ComplexField build_initial(const ProfileSpec& spec,
                           std::shared_ptr<const Grid> grid);

// Multiplies f by exp(-i |x|^2 / (4a)). a must be nonzero.
void apply_chirp(ComplexField& f, double a);

// Overflow-safe log(2 cosh x) = |x| + log1p(exp(-2|x|)).
double log_2cosh(double x);

}  // namespace nlsb
