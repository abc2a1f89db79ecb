#pragma once

#include "nlsb/grid.hpp"
#include "nlsb/model.hpp"

namespace nlsb {

// Strang-split spectral stepper for i u_t + Laplacian(u) = -g(t)|u|^{2s} u.
// Both substeps are exact flows:
//   kinetic   : u_hat <- exp(-i |k|^2 dt) u_hat        (free Schroedinger)
//   nonlinear : u <- u exp(i G |u|^{2s}),  G = integral of g over [t, t+dt]
// so a step is unitary on the grid and mass is conserved to roundoff.
class TsspStepper {
 public:
  TsspStepper(std::shared_ptr<const Grid> grid, ModelParams params);

  void kinetic_step(ComplexField& f, double dt);
  void nonlinear_step(ComplexField& f, double t, double dt);
  // X^{dt/2} Y^{dt} X^{dt/2} with Y evaluated on [t, t+dt].
  void strang_step(ComplexField& f, double t, double dt);

  const ModelParams& params() const { return params_; }

  // Spectral coefficients of f as of the last kinetic_step (and therefore of
  // the field right after a strang_step, whose last substep is kinetic).
  // A bare nonlinear_step mutates f in physical space and clears the flag.
  // Lets diagnostics skip an FFT right after a step.
  const std::vector<std::complex<double>>& last_coeffs() const {
    return coeffs_;
  }
  bool last_coeffs_valid() const { return coeffs_valid_; }

 private:
  std::shared_ptr<const Grid> grid_;
  ModelParams params_;
  FourierTransform ft_;
  std::vector<double> lap_;  // -|k|^2
  std::vector<std::complex<double>> coeffs_;
  std::vector<std::complex<double>> phase_;  // cached exp(i lap dt)
  double phase_dt_ = 0.0;
  bool phase_valid_ = false;
  bool coeffs_valid_ = false;
};

}  // namespace nlsb
