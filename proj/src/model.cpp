#include "nlsb/model.hpp"

#include <cmath>
#include <limits>

#include "nlsb/errors.hpp"

namespace nlsb {

CouplingMode CouplingMode::constant(double lambda) {
  CouplingMode m;
  m.kind = Kind::constant;
  m.lambda = lambda;
  return m;
}

CouplingMode CouplingMode::damped(double delta) {
  CouplingMode m;
  m.kind = Kind::damped;
  m.delta = delta;
  return m;
}

CouplingMode CouplingMode::conformal(double a) {
  CouplingMode m;
  m.kind = Kind::conformal;
  m.conformal_a = a;
  return m;
}

void ModelParams::validate() const {
  if (n != 1 && n != 2) throw ConfigError("model: n must be 1 or 2");
  if (!(sigma > 0.0)) throw ConfigError("model: sigma must be positive");
  switch (coupling.kind) {
    case CouplingMode::Kind::constant:
      if (!(coupling.lambda >= 0.0))
        throw ConfigError("model: constant coupling needs lambda >= 0");
      break;
    case CouplingMode::Kind::damped:
      if (!(coupling.delta >= 0.0))
        throw ConfigError("model: damped coupling needs delta >= 0");
      break;
    case CouplingMode::Kind::conformal:
      if (coupling.conformal_a == 0.0)
        throw ConfigError("model: conformal coupling needs a != 0");
      break;
  }
}

double ModelParams::g(double t) const {
  switch (coupling.kind) {
    case CouplingMode::Kind::constant:
      return coupling.lambda;
    case CouplingMode::Kind::damped:
      return std::exp(-2.0 * sigma * coupling.delta * t);
    case CouplingMode::Kind::conformal: {
      const double h = 1.0 - t / coupling.conformal_a;
      const double p = n * sigma - 2.0;
      if (h < 0.0 || (h == 0.0 && p < 0.0))
        throw SolverError("conformal coupling evaluated at t >= a");
      return std::pow(h, p);
    }
  }
  return 0.0;  // unreachable
}

double ModelParams::g_integral(double t, double dt) const {
  switch (coupling.kind) {
    case CouplingMode::Kind::constant:
      return coupling.lambda * dt;
    case CouplingMode::Kind::damped: {
      const double x = 2.0 * sigma * coupling.delta;
      if (x == 0.0) return dt;
      // exp(-x t) * (1 - exp(-x dt)) / x; expm1 keeps small-delta runs exact.
      return std::exp(-x * t) * (-std::expm1(-x * dt)) / x;
    }
    case CouplingMode::Kind::conformal: {
      const double a = coupling.conformal_a;
      const double h0 = 1.0 - t / a;
      const double h1 = 1.0 - (t + dt) / a;
      const double p = n * sigma - 2.0;
      // A step may end exactly on t = a; the improper integral converges
      // there iff p + 1 > 0 (pow(0, p+1) = 0 is the correct limit).
      if (!(h0 > 0.0) || h1 < 0.0 || (h1 == 0.0 && p + 1.0 <= 0.0))
        throw SolverError("conformal coupling integrated across t = a");
      if (std::abs(p + 1.0) < 1e-12)  // n*sigma == 1: logarithmic antiderivative
        return a * std::log(h0 / h1);
      return a / (p + 1.0) * (std::pow(h0, p + 1.0) - std::pow(h1, p + 1.0));
    }
  }
  return 0.0;  // unreachable
}

double ModelParams::coupling_horizon() const {
  if (coupling.kind == CouplingMode::Kind::conformal && coupling.conformal_a > 0.0)
    return coupling.conformal_a;
  return std::numeric_limits<double>::infinity();
}

bool ModelParams::critical() const {
  return std::abs(n * sigma - 2.0) < 1e-12;
}

}  // namespace nlsb
