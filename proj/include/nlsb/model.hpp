#pragma once

#include <limits>

namespace nlsb {

// Time-dependent coupling g(t) in  i u_t + Laplacian(u) = -g(t) |u|^{2 sigma} u.
//   constant :  g(t) = lambda                 (lambda >= 0; 0 is the free flow)
//   damped   :  g(t) = exp(-2 sigma delta t)  (delta >= 0)
//   conformal:  g(t) = (1 - t/a)^{n sigma - 2}, a != 0, defined while 1 - t/a > 0
struct CouplingMode {
  enum class Kind { constant, damped, conformal };
  Kind kind = Kind::constant;
  double lambda = 1.0;
  double delta = 0.0;
  double conformal_a = 1.0;

  static CouplingMode constant(double lambda);
  static CouplingMode damped(double delta);
  static CouplingMode conformal(double a);
};

struct ModelParams {
  int n = 1;           // model space dimension; must match the grid
  double sigma = 2.0;  // nonlinearity power, > 0
  CouplingMode coupling;

  void validate() const;

  double g(double t) const;

  // Exact integral of g over [t, t+dt] (closed form; dt may be negative).
  double g_integral(double t, double dt) const;

  // Largest time the coupling is defined for: conformal_a for a > 0,
  // +infinity otherwise.
  double coupling_horizon() const;

  // True when n*sigma == 2 (the pseudo-conformally invariant power).
  bool critical() const;
};

}  // namespace nlsb
