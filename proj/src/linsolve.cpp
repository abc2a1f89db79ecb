#include "nlsb/linsolve.hpp"

#include <cmath>

#include "nlsb/errors.hpp"

namespace nlsb {

namespace {

// Thomas algorithm for a tridiagonal system with constant off-diagonal `off`
// and the given diagonal; solves in place (r -> x). scratch holds the
// eliminated super-diagonal.
void tridiagonal_solve(const std::vector<cxd>& diag, cxd off,
                       std::vector<cxd>& r, std::vector<cxd>& scratch) {
  const std::size_t n = diag.size();
  scratch.resize(n);
  cxd piv = diag[0];
  if (std::abs(piv) < 1e-300) throw SolverError("tridiagonal pivot underflow");
  scratch[0] = off / piv;
  r[0] /= piv;
  for (std::size_t j = 1; j < n; ++j) {
    piv = diag[j] - off * scratch[j - 1];
    if (std::abs(piv) < 1e-300)
      throw SolverError("tridiagonal pivot underflow");
    scratch[j] = off / piv;
    r[j] = (r[j] - off * r[j - 1]) / piv;
  }
  for (std::size_t j = n - 1; j-- > 0;) r[j] -= scratch[j] * r[j + 1];
}

}  // namespace

void cyclic_tridiagonal_solve(const std::vector<cxd>& diag, cxd off,
                              std::vector<cxd>& r) {
  const std::size_t n = diag.size();
  if (n < 3) throw SolverError("cyclic tridiagonal solve needs n >= 3");
  if (r.size() != n)
    throw SolverError("cyclic tridiagonal solve: size mismatch");

  // A = T + u v^T with u = (gamma, 0, ..., off)^T, v = (1, 0, ..., off/gamma)^T
  // and T the tridiagonal part with modified first/last diagonal entries.
  const cxd gamma = -diag[0];
  std::vector<cxd> dmod(diag);
  dmod[0] -= gamma;
  dmod[n - 1] -= off * off / gamma;

  std::vector<cxd> scratch;
  tridiagonal_solve(dmod, off, r, scratch);

  std::vector<cxd> z(n, cxd(0.0, 0.0));
  z[0] = gamma;
  z[n - 1] = off;
  tridiagonal_solve(dmod, off, z, scratch);

  const cxd vr = r[0] + (off / gamma) * r[n - 1];
  const cxd vz = cxd(1.0, 0.0) + z[0] + (off / gamma) * z[n - 1];
  if (std::abs(vz) < 1e-300)
    throw SolverError("cyclic correction breakdown");
  const cxd factor = vr / vz;
  for (std::size_t j = 0; j < n; ++j) r[j] -= factor * z[j];
}

int bicgstab(const std::function<void(const std::vector<cxd>&,
                                      std::vector<cxd>&)>& matvec,
             const std::vector<cxd>& b, std::vector<cxd>& x,
             const std::vector<cxd>& jacobi_diag, double tol, int max_iter) {
  const std::size_t n = b.size();
  auto dot = [n](const std::vector<cxd>& a, const std::vector<cxd>& c) {
    cxd s(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) s += std::conj(a[i]) * c[i];
    return s;
  };
  auto nrm = [&dot](const std::vector<cxd>& a) {
    return std::sqrt(std::abs(dot(a, a).real()));
  };
  auto precond = [&](std::vector<cxd>& v) {
    for (std::size_t i = 0; i < n; ++i) v[i] /= jacobi_diag[i];
  };

  const double bnorm = nrm(b);
  if (bnorm == 0.0) {
    x.assign(n, cxd(0.0, 0.0));
    return 0;
  }

  std::vector<cxd> r(n), rhat(n), p(n), v(n), s(n), t(n), ph(n), sh(n);
  matvec(x, r);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
  if (nrm(r) <= tol * bnorm) return 0;  // warm start already converged
  rhat = r;
  cxd rho(1.0, 0.0), alpha(1.0, 0.0), omega(1.0, 0.0);
  p.assign(n, cxd(0.0, 0.0));
  v.assign(n, cxd(0.0, 0.0));

  for (int it = 1; it <= max_iter; ++it) {
    const cxd rho_new = dot(rhat, r);
    if (std::abs(rho_new) < 1e-300) throw SolverError("bicgstab breakdown (rho)");
    const cxd beta = (rho_new / rho) * (alpha / omega);
    rho = rho_new;
    for (std::size_t i = 0; i < n; ++i)
      p[i] = r[i] + beta * (p[i] - omega * v[i]);
    ph = p;
    precond(ph);
    matvec(ph, v);
    const cxd rhat_v = dot(rhat, v);
    if (std::abs(rhat_v) < 1e-300) throw SolverError("bicgstab breakdown (v)");
    alpha = rho / rhat_v;
    for (std::size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
    if (nrm(s) <= tol * bnorm) {
      for (std::size_t i = 0; i < n; ++i) x[i] += alpha * ph[i];
      return it;
    }
    sh = s;
    precond(sh);
    matvec(sh, t);
    const cxd tt = dot(t, t);
    if (std::abs(tt) < 1e-300) throw SolverError("bicgstab breakdown (t)");
    omega = dot(t, s) / tt;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * ph[i] + omega * sh[i];
      r[i] = s[i] - omega * t[i];
    }
    if (nrm(r) <= tol * bnorm) return it;
    if (std::abs(omega) < 1e-300)
      throw SolverError("bicgstab breakdown (omega)");
  }
  throw SolverError("bicgstab: no convergence within iteration cap");
}

}  // namespace nlsb
