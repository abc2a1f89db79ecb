#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace nlsb {

using cxd = std::complex<double>;

// Solves A x = r in place (r becomes x) for the N x N cyclic tridiagonal
// matrix with A[j][j] = diag[j], A[j][j+-1] = off and periodic corners
// A[0][N-1] = A[N-1][0] = off. Thomas factorisation plus a rank-1
// Sherman-Morrison correction for the corners; no pivoting (the Crank-
// Nicolson matrices this is used on are far from singular). N >= 3.
void cyclic_tridiagonal_solve(const std::vector<cxd>& diag, cxd off,
                              std::vector<cxd>& r);

// Matrix-free BiCGSTAB with Jacobi (diagonal) preconditioning.
// Returns the iteration count; throws SolverError when the relative residual
// has not reached `tol` within `max_iter` iterations or the recurrence breaks
// down. x holds the initial guess on entry and the solution on exit.
int bicgstab(const std::function<void(const std::vector<cxd>&,
                                      std::vector<cxd>&)>& matvec,
             const std::vector<cxd>& b, std::vector<cxd>& x,
             const std::vector<cxd>& jacobi_diag, double tol, int max_iter);

}  // namespace nlsb
