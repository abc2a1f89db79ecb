#include <cmath>
#include <limits>

#include "doctest.h"
#include "nlsb/errors.hpp"
#include "nlsb/model.hpp"

using namespace nlsb;

namespace {

ModelParams make_params(int n, double sigma, CouplingMode cm) {
  ModelParams p;
  p.n = n;
  p.sigma = sigma;
  p.coupling = cm;
  return p;
}

// Composite Simpson on [t, t+dt]; plenty accurate for smooth g.
double quad_g(const ModelParams& p, double t, double dt, int panels = 4000) {
  const double h = dt / panels;
  double s = p.g(t) + p.g(t + dt);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * p.g(t + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("validation") {
  CHECK_THROWS_AS(make_params(3, 2.0, CouplingMode::constant(1.0)).validate(),
                  ConfigError);
  CHECK_THROWS_AS(make_params(1, 0.0, CouplingMode::constant(1.0)).validate(),
                  ConfigError);
  CHECK_THROWS_AS(make_params(1, 2.0, CouplingMode::constant(-1.0)).validate(),
                  ConfigError);
  CHECK_THROWS_AS(make_params(1, 2.0, CouplingMode::damped(-0.5)).validate(),
                  ConfigError);
  CHECK_THROWS_AS(make_params(1, 2.0, CouplingMode::conformal(0.0)).validate(),
                  ConfigError);
  CHECK_NOTHROW(make_params(1, 2.0, CouplingMode::constant(0.0)).validate());
  CHECK_NOTHROW(make_params(2, 1.0, CouplingMode::damped(0.0)).validate());
  CHECK_NOTHROW(make_params(1, 3.0, CouplingMode::conformal(-2.0)).validate());
}

TEST_CASE("coupling values") {
  auto c = make_params(1, 2.0, CouplingMode::constant(2.5));
  CHECK(c.g(0.0) == 2.5);
  CHECK(c.g(17.3) == 2.5);

  auto d = make_params(1, 2.0, CouplingMode::damped(0.5));  // 2*sigma*delta = 2
  CHECK(d.g(0.0) == 1.0);
  CHECK(d.g(1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));

  auto f = make_params(1, 3.0, CouplingMode::conformal(2.0));  // exponent 1
  CHECK(f.g(0.0) == doctest::Approx(1.0));
  CHECK(f.g(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f.g(2.0) == doctest::Approx(0.0).scale(1.0));  // exponent > 0: limit 0
  CHECK_THROWS_AS(f.g(2.5), SolverError);

  auto s = make_params(1, 0.5, CouplingMode::conformal(2.0));  // exponent -1.5
  CHECK_THROWS_AS(s.g(2.0), SolverError);
}

TEST_CASE("exact coupling integrals match quadrature") {
  const struct {
    ModelParams p;
    double t, dt;
  } cases[] = {
      {make_params(1, 2.0, CouplingMode::constant(1.7)), 0.3, 0.05},
      {make_params(1, 2.0, CouplingMode::damped(0.8)), 0.0, 0.1},
      {make_params(2, 1.0, CouplingMode::damped(1.75)), 0.4, 0.02},
      {make_params(1, 3.0, CouplingMode::conformal(1.5)), 0.2, 0.1},
      {make_params(1, 3.0, CouplingMode::conformal(-0.7)), 0.0, 0.3},
      {make_params(1, 1.0, CouplingMode::conformal(2.0)), 0.1, 0.2},  // log case
      {make_params(1, 0.75, CouplingMode::conformal(3.0)), 0.0, 0.5},
  };
  for (const auto& c : cases) {
    CHECK(c.p.g_integral(c.t, c.dt) ==
          doctest::Approx(quad_g(c.p, c.t, c.dt)).epsilon(1e-12));
  }
}

TEST_CASE("small and zero damping stay exact") {
  auto d0 = make_params(1, 2.0, CouplingMode::damped(0.0));
  CHECK(d0.g_integral(3.0, 1e-3) == 1e-3);  // exactly dt
  auto dtiny = make_params(1, 2.0, CouplingMode::damped(1e-13));
  CHECK(dtiny.g_integral(0.0, 1e-3) == doctest::Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("conformal integral across the horizon") {
  auto p = make_params(1, 3.0, CouplingMode::conformal(1.0));  // exponent 1
  CHECK_NOTHROW(p.g_integral(0.9, 0.1));  // lands exactly on t = a
  CHECK(p.g_integral(0.9, 0.1) ==
        doctest::Approx(0.5 * 0.1 * 0.1).epsilon(1e-12));  // a/2 h0^2
  CHECK_THROWS_AS(p.g_integral(0.95, 0.1), SolverError);
  CHECK_THROWS_AS(p.g_integral(1.05, 0.1), SolverError);
  auto lg = make_params(1, 1.0, CouplingMode::conformal(1.0));  // divergent
  CHECK_THROWS_AS(lg.g_integral(0.9, 0.1), SolverError);
}

TEST_CASE("horizon and criticality") {
  CHECK(make_params(1, 2.0, CouplingMode::constant(1.0)).coupling_horizon() ==
        std::numeric_limits<double>::infinity());
  CHECK(make_params(1, 2.0, CouplingMode::damped(1.0)).coupling_horizon() ==
        std::numeric_limits<double>::infinity());
  CHECK(make_params(1, 2.0, CouplingMode::conformal(2.5)).coupling_horizon() ==
        2.5);
  CHECK(make_params(1, 2.0, CouplingMode::conformal(-2.5)).coupling_horizon() ==
        std::numeric_limits<double>::infinity());

  CHECK(make_params(1, 2.0, CouplingMode::constant(1.0)).critical());
  CHECK(make_params(2, 1.0, CouplingMode::constant(1.0)).critical());
  CHECK_FALSE(make_params(1, 3.0, CouplingMode::constant(1.0)).critical());
  CHECK_FALSE(make_params(1, 1.0, CouplingMode::constant(1.0)).critical());
}

}  // TEST_SUITE
