#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nlsb/errors.hpp"
#include "nlsb/grid.hpp"

using namespace nlsb;
using cxd = std::complex<double>;

namespace {

ComplexField random_field(std::shared_ptr<const Grid> g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexField f = make_field(g);
  for (auto& v : f.values) v = cxd(dist(rng), dist(rng));
  return f;
}

double field_dist(const ComplexField& a, const ComplexField& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    s += std::norm(a.values[i] - b.values[i]);
  return std::sqrt(s * quad_weight(*a.grid));
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("construction validates its arguments") {
  CHECK_THROWS_AS(make_grid(3, 8.0, 64), ConfigError);
  CHECK_THROWS_AS(make_grid(0, 8.0, 64), ConfigError);
  CHECK_THROWS_AS(make_grid(1, 0.0, 64), ConfigError);
  CHECK_THROWS_AS(make_grid(1, -1.0, 64), ConfigError);
  CHECK_THROWS_AS(make_grid(1, 8.0, 100), ConfigError);  // not a power of two
  CHECK_THROWS_AS(make_grid(1, 8.0, 4), ConfigError);    // too small
  CHECK_NOTHROW(make_grid(1, 8.0, 8));
  CHECK_NOTHROW(make_grid(2, 4.0, 32));
}

TEST_CASE("node spacing and coordinates") {
  auto g = make_grid(1, 8.0, 4096);
  CHECK(g->dx == doctest::Approx(0.00390625).epsilon(1e-15));
  CHECK(g->coord(0) == doctest::Approx(-8.0));
  CHECK(g->coord(4096 / 2) == doctest::Approx(0.0).scale(1.0));
  CHECK(g->size() == 4096);
  auto g2 = make_grid(2, 4.0, 32);
  CHECK(g2->size() == 32 * 32);
  CHECK(g2->index2(3, 5) == 3 * 32 + 5);
}

TEST_CASE("wavenumber table follows the FFT-native layout") {
  auto g = make_grid(1, 8.0, 8);
  const double k0 = std::numbers::pi / 8.0;
  const double expected[] = {0, 1, 2, 3, -4, -3, -2, -1};
  REQUIRE(g->wavenumbers.size() == 8);
  for (int j = 0; j < 8; ++j)
    CHECK(g->wavenumbers[j] == doctest::Approx(k0 * expected[j]).epsilon(1e-15));
}

TEST_CASE("laplacian symbol is -|k|^2") {
  auto g = make_grid(1, 8.0, 16);
  auto lap = laplacian_symbol(*g);
  REQUIRE(lap.size() == g->size());
  for (std::size_t j = 0; j < lap.size(); ++j) {
    const double k = g->wavenumbers[j];
    CHECK(lap[j] == doctest::Approx(-k * k).epsilon(1e-15));
    CHECK(lap[j] <= 0.0);
  }
  auto g2 = make_grid(2, 4.0, 16);
  auto lap2 = laplacian_symbol(*g2);
  const double kx = g2->wavenumbers[3], ky = g2->wavenumbers[9];
  CHECK(lap2[g2->index2(3, 9)] ==
        doctest::Approx(-(kx * kx + ky * ky)).epsilon(1e-14));
}

TEST_CASE("transform round-trips to roundoff") {
  for (int dim : {1, 2}) {
    auto g = make_grid(dim, 6.0, dim == 1 ? 256 : 32);
    ComplexField f = random_field(g, 42 + dim);
    FourierTransform ft(g);
    std::vector<cxd> coeffs, back;
    ft.forward(f.values, coeffs);
    ft.inverse(coeffs, back);
    double err = 0.0;
    for (std::size_t i = 0; i < back.size(); ++i)
      err = std::max(err, std::abs(back[i] - f.values[i]));
    CHECK(err < 1e-12);
  }
}

TEST_CASE("Parseval with the 1/N forward scaling") {
  for (int dim : {1, 2}) {
    auto g = make_grid(dim, 5.0, dim == 1 ? 512 : 64);
    ComplexField f = random_field(g, 7 * dim + 1);
    auto coeffs = to_spectral(f);
    double spec = 0.0;
    for (const auto& c : coeffs) spec += std::norm(c);
    spec *= std::pow(2.0 * g->half_width, dim);
    CHECK(mass_sq(f) == doctest::Approx(spec).epsilon(1e-12));
  }
}

TEST_CASE("2D coefficients are the tensor product of 1D transforms") {
  const int np = 32;
  auto g1 = make_grid(1, 4.0, np);
  auto g2 = make_grid(2, 4.0, np);
  ComplexField gx = random_field(g1, 11), gy = random_field(g1, 12);
  ComplexField f = make_field(g2);
  for (int ix = 0; ix < np; ++ix)
    for (int iy = 0; iy < np; ++iy)
      f.values[g2->index2(ix, iy)] = gx.values[ix] * gy.values[iy];
  auto cx = to_spectral(gx), cy = to_spectral(gy);
  auto c2 = to_spectral(f);
  double err = 0.0;
  for (int ix = 0; ix < np; ++ix)
    for (int iy = 0; iy < np; ++iy)
      err = std::max(err,
                     std::abs(c2[g2->index2(ix, iy)] - cx[ix] * cy[iy]));
  CHECK(err < 1e-12);
}

TEST_CASE("spectral second derivative of a plain sine") {
  auto g = make_grid(1, 8.0, 128);
  const double k = std::numbers::pi / 8.0;  // one full period on the box
  ComplexField f = make_field(g);
  for (int i = 0; i < 128; ++i) f.values[i] = std::sin(k * g->coord(i));
  auto coeffs = to_spectral(f);
  auto lap = laplacian_symbol(*g);
  for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] *= lap[j];
  ComplexField d2 = from_spectral(g, coeffs);
  double err = 0.0;
  for (int i = 0; i < 128; ++i)
    err = std::max(err,
                   std::abs(d2.values[i] - (-k * k) * f.values[i]));
  CHECK(err < 1e-10);
}

TEST_CASE("quadrature on a Gaussian matches the closed form") {
  auto g = make_grid(1, 8.0, 512);
  ComplexField f = make_field(g);
  for (int i = 0; i < 512; ++i) f.values[i] = std::exp(-g->coord(i) * g->coord(i));
  // integral of exp(-2x^2) = sqrt(pi/2)
  CHECK(mass_sq(f) ==
        doctest::Approx(std::sqrt(std::numbers::pi / 2.0)).epsilon(1e-12));
  CHECK(lp_norm_pow(f, 6.0) ==
        doctest::Approx(std::sqrt(std::numbers::pi / 6.0)).epsilon(1e-12));
  CHECK(quad_weight(*g) == doctest::Approx(16.0 / 512).epsilon(1e-15));
}

TEST_CASE("transform instances are independent") {
  auto g = make_grid(1, 4.0, 64);
  FourierTransform a(g), b(g);
  ComplexField f = random_field(g, 3);
  std::vector<cxd> ca, cb;
  a.forward(f.values, ca);
  b.forward(f.values, cb);
  for (std::size_t i = 0; i < ca.size(); ++i)
    CHECK(std::abs(ca[i] - cb[i]) == doctest::Approx(0.0).scale(1.0));
  (void)field_dist;
}

}  // TEST_SUITE
