#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "nlsb/errors.hpp"
#include "nlsb/grid.hpp"
#include "nlsb/initial_data.hpp"
#include "nlsb/relaxation.hpp"
#include "nlsb/tssp.hpp"

using namespace nlsb;
using cxd = std::complex<double>;

namespace {

ModelParams make_params(int n, double sigma, CouplingMode cm) {
  ModelParams p;
  p.n = n;
  p.sigma = sigma;
  p.coupling = cm;
  return p;
}

ComplexField hump_data(std::shared_ptr<const Grid> g) {
  ProfileSpec s;
  s.kind = ProfileKind::single_gauss;
  s.amplitude = 1.75;
  s.phase = PhaseKind::log_cosh;
  return build_initial(s, g);
}

}  // namespace

TEST_SUITE("relaxation") {

TEST_CASE("psi starts at |u0|^{2 sigma}") {
  auto g = make_grid(1, 8.0, 256);
  RelaxationStepper st(g, make_params(1, 1.5, CouplingMode::constant(1.0)),
                       1e-3);
  ComplexField u0 = hump_data(g);
  RsState s = st.init(u0);
  REQUIRE(s.psi_half.size() == u0.values.size());
  for (std::size_t i = 0; i < u0.values.size(); ++i)
    CHECK(s.psi_half[i] ==
          doctest::Approx(std::pow(std::abs(u0.values[i]), 3.0))
              .epsilon(1e-12));
  CHECK(s.n_step == 0);
  CHECK(s.dt == 1e-3);
}

TEST_CASE("mass is conserved exactly, any coupling") {
  auto g = make_grid(1, 8.0, 512);
  for (auto cm : {CouplingMode::constant(0.0), CouplingMode::constant(1.0),
                  CouplingMode::damped(0.8)}) {
    RelaxationStepper st(g, make_params(1, 2.0, cm), 1e-3);
    RsState s = st.init(hump_data(g));
    const double m0 = mass_sq(s.u);
    for (int k = 0; k < 200; ++k) st.step(s);
    CHECK(std::abs(mass_sq(s.u) - m0) / m0 < 1e-12);
    CHECK(s.n_step == 200);
  }
}

TEST_CASE("scheme energy is exactly conserved for sigma = 1") {
  auto g = make_grid(1, 16.0, 1024);
  RelaxationStepper st(g, make_params(1, 1.0, CouplingMode::constant(1.0)),
                       1e-3);
  ComplexField u0 = make_field(g);
  for (int i = 0; i < 1024; ++i)
    u0.values[i] = std::numbers::sqrt2 / std::cosh(g->coord(i));
  RsState s = st.init(u0);
  st.step(s);
  const double e0 = s.scheme_energy;
  REQUIRE(s.scheme_energy_valid);
  REQUIRE(e0 != 0.0);
  for (int k = 0; k < 500; ++k) st.step(s);
  CHECK(std::abs(s.scheme_energy - e0) / std::abs(e0) < 1e-10);
}

TEST_CASE("scheme energy drift is second order for sigma = 2") {
  auto g = make_grid(1, 8.0, 512);
  ProfileSpec mild;  // focusing but far from collapse over t <= 0.2
  mild.kind = ProfileKind::single_gauss;
  mild.amplitude = 1.3;
  mild.phase = PhaseKind::log_cosh;
  auto drift = [&](double dt) {
    RelaxationStepper st(g, make_params(1, 2.0, CouplingMode::constant(1.0)),
                         dt);
    RsState s = st.init(build_initial(mild, g));
    const int steps = static_cast<int>(std::llround(0.2 / dt));
    double e0 = 0.0, emin = 0.0, emax = 0.0;
    for (int k = 0; k < steps; ++k) {
      st.step(s);
      if (k == 0) {
        e0 = emin = emax = s.scheme_energy;
      } else {
        emin = std::min(emin, s.scheme_energy);
        emax = std::max(emax, s.scheme_energy);
      }
    }
    return (emax - emin) / std::abs(e0);
  };
  const double d1 = drift(2e-3), d2 = drift(1e-3);
  CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.35));
}

TEST_CASE("preserves the cubic soliton") {
  auto g = make_grid(1, 16.0, 2048);
  RelaxationStepper st(g, make_params(1, 1.0, CouplingMode::constant(1.0)),
                       1e-3);
  ComplexField u0 = make_field(g);
  for (int i = 0; i < 2048; ++i)
    u0.values[i] = std::numbers::sqrt2 / std::cosh(g->coord(i));
  RsState s = st.init(u0);
  const int steps = 200;  // t = 0.2
  for (int k = 0; k < steps; ++k) st.step(s);
  // The FD Laplacian makes this second order in dx as well.
  double err = 0.0;
  for (int i = 0; i < 2048; ++i)
    err = std::max(err,
                   std::abs(std::abs(s.u.values[i]) - std::abs(u0.values[i])));
  CHECK(err < 5e-3);
}

TEST_CASE("matches tssp on a smooth pre-blowup run") {
  auto g = make_grid(1, 8.0, 1024);
  auto p = make_params(1, 2.0, CouplingMode::constant(1.0));
  ComplexField u0 = hump_data(g);

  RelaxationStepper rs(g, p, 2e-4);
  RsState s = rs.init(u0);
  for (int k = 0; k < 500; ++k) rs.step(s);  // t = 0.1

  TsspStepper ts(g, p);
  ComplexField v = u0;
  for (int k = 0; k < 500; ++k) ts.strang_step(v, k * 2e-4, 2e-4);

  double err = 0.0;
  for (std::size_t i = 0; i < v.values.size(); ++i)
    err += std::norm(v.values[i] - s.u.values[i]);
  err = std::sqrt(err * quad_weight(*g));
  CHECK(err < 5e-3);  // independent discretisations, same PDE
}

TEST_CASE("2D stepping conserves mass through the Krylov solver") {
  auto g = make_grid(2, 4.0, 64);
  RelaxationStepper st(g, make_params(2, 1.0, CouplingMode::constant(1.0)),
                       1e-3);
  ProfileSpec s2;
  s2.kind = ProfileKind::td_two_hump;
  s2.amplitude = 2.0;
  s2.phase = PhaseKind::radial_log_cosh;
  RsState s = st.init(build_initial(s2, g));
  const double m0 = mass_sq(s.u);
  for (int k = 0; k < 20; ++k) st.step(s);
  CHECK(std::abs(mass_sq(s.u) - m0) / m0 < 1e-8);
}

TEST_CASE("parameter validation") {
  auto g = make_grid(1, 8.0, 64);
  CHECK_THROWS_AS(
      RelaxationStepper(g, make_params(1, 2.0, CouplingMode::constant(1.0)),
                        0.0),
      ConfigError);
  auto g2 = make_grid(2, 4.0, 32);
  CHECK_THROWS_AS(
      RelaxationStepper(g2, make_params(1, 2.0, CouplingMode::constant(1.0)),
                        1e-3),
      ConfigError);
}

}  // TEST_SUITE
