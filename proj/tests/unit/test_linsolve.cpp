#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "nlsb/errors.hpp"
#include "nlsb/linsolve.hpp"

using namespace nlsb;

namespace {

// Dense application of the cyclic tridiagonal matrix defined by (diag, off).
std::vector<cxd> cyclic_apply(const std::vector<cxd>& diag, cxd off,
                              const std::vector<cxd>& x) {
  const std::size_t n = diag.size();
  std::vector<cxd> y(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t prev = (j + n - 1) % n, next = (j + 1) % n;
    y[j] = diag[j] * x[j] + off * (x[prev] + x[next]);
  }
  return y;
}

std::vector<cxd> random_vec(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cxd> v(n);
  for (auto& e : v) e = cxd(dist(rng), dist(rng));
  return v;
}

double max_abs_diff(const std::vector<cxd>& a, const std::vector<cxd>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE("linsolve") {

TEST_CASE("cyclic solve is exact on a diagonal system") {
  std::vector<cxd> diag(8, cxd(2.0, -1.0));
  std::vector<cxd> r = random_vec(8, 1);
  std::vector<cxd> x = r;
  cyclic_tridiagonal_solve(diag, cxd(0.0, 0.0), x);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(std::abs(x[i] - r[i] / cxd(2.0, -1.0)) < 1e-14);
}

TEST_CASE("cyclic solve reproduces the right-hand side") {
  // Crank-Nicolson-shaped systems: diag = 1 + 2i b + potential, off = -i b.
  for (unsigned seed : {2u, 3u, 4u}) {
    const std::size_t n = 257;  // odd size; nothing assumes powers of two
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    const double b = 3.7;
    const cxd off(0.0, -b);
    std::vector<cxd> diag(n);
    for (auto& d : diag) d = cxd(1.0, 2.0 * b + dist(rng));
    std::vector<cxd> r = random_vec(n, seed + 100);
    std::vector<cxd> x = r;
    cyclic_tridiagonal_solve(diag, off, x);
    CHECK(max_abs_diff(cyclic_apply(diag, off, x), r) < 1e-10);
  }
}

TEST_CASE("cyclic solve agrees with a known closed solution") {
  // Circulant case: diag constant, so eigenvectors are Fourier modes and a
  // constant right-hand side maps to a constant solution.
  const std::size_t n = 16;
  std::vector<cxd> diag(n, cxd(4.0, 1.0));
  const cxd off(0.5, -0.25);
  std::vector<cxd> r(n, cxd(1.0, 0.0));
  std::vector<cxd> x = r;
  cyclic_tridiagonal_solve(diag, off, x);
  const cxd expect = cxd(1.0, 0.0) / (cxd(4.0, 1.0) + 2.0 * off);
  for (const auto& xi : x) CHECK(std::abs(xi - expect) < 1e-13);
}

TEST_CASE("bicgstab solves the same systems matrix-free") {
  const std::size_t n = 257;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  const cxd off(0.0, -2.0);
  std::vector<cxd> diag(n);
  for (auto& d : diag) d = cxd(1.0, 4.0 + dist(rng));
  std::vector<cxd> b = random_vec(n, 8);

  std::vector<cxd> x_direct = b;
  cyclic_tridiagonal_solve(diag, off, x_direct);

  auto matvec = [&](const std::vector<cxd>& in, std::vector<cxd>& out) {
    out = cyclic_apply(diag, off, in);
  };
  std::vector<cxd> x(n, cxd(0.0, 0.0));
  const int iters = bicgstab(matvec, b, x, diag, 1e-12, 1000);
  CHECK(iters > 0);
  CHECK(max_abs_diff(x, x_direct) < 1e-8);
}

TEST_CASE("bicgstab honours its iteration cap") {
  const std::size_t n = 64;
  std::vector<cxd> diag(n, cxd(1.0, 8.0));
  const cxd off(0.0, -4.0);
  auto matvec = [&](const std::vector<cxd>& in, std::vector<cxd>& out) {
    out = cyclic_apply(diag, off, in);
  };
  std::vector<cxd> b = random_vec(n, 9), x(n, cxd(0.0, 0.0));
  CHECK_THROWS_AS(bicgstab(matvec, b, x, diag, 1e-14, 1), SolverError);
}

TEST_CASE("bicgstab accepts a warm start") {
  const std::size_t n = 128;
  std::vector<cxd> diag(n, cxd(1.0, 6.0));
  const cxd off(0.0, -3.0);
  auto matvec = [&](const std::vector<cxd>& in, std::vector<cxd>& out) {
    out = cyclic_apply(diag, off, in);
  };
  std::vector<cxd> x_true = random_vec(n, 10);
  std::vector<cxd> b = cyclic_apply(diag, off, x_true);
  std::vector<cxd> x = x_true;  // exact guess: should converge immediately
  const int iters = bicgstab(matvec, b, x, diag, 1e-10, 100);
  CHECK(iters <= 1);
  CHECK(max_abs_diff(x, x_true) < 1e-9);
}

}  // TEST_SUITE
