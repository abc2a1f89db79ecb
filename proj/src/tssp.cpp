#include "nlsb/tssp.hpp"

#include <cmath>

#include "nlsb/errors.hpp"

namespace nlsb {

TsspStepper::TsspStepper(std::shared_ptr<const Grid> grid, ModelParams params)
    : grid_(grid), params_(params), ft_(grid), lap_(laplacian_symbol(*grid)) {
  params_.validate();
  if (params_.n != grid_->dim)
    throw ConfigError("tssp: model dimension does not match grid");
  coeffs_.resize(grid_->size());
  phase_.resize(grid_->size());
}

void TsspStepper::kinetic_step(ComplexField& f, double dt) {
  if (!phase_valid_ || dt != phase_dt_) {
    for (std::size_t j = 0; j < lap_.size(); ++j)
      phase_[j] = std::polar(1.0, lap_[j] * dt);  // exp(-i |k|^2 dt)
    phase_dt_ = dt;
    phase_valid_ = true;
  }
  ft_.forward(f.values, coeffs_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] *= phase_[j];
  ft_.inverse(coeffs_, f.values);
  coeffs_valid_ = true;
}

void TsspStepper::nonlinear_step(ComplexField& f, double t, double dt) {
  coeffs_valid_ = false;
  const double G = params_.g_integral(t, dt);
  const double s = params_.sigma;
  // |u|^{2s} with cheap paths for the integer powers used by the catalog.
  if (s == 1.0) {
    for (auto& v : f.values) v *= std::polar(1.0, G * std::norm(v));
  } else if (s == 2.0) {
    for (auto& v : f.values) {
      const double a2 = std::norm(v);
      v *= std::polar(1.0, G * a2 * a2);
    }
  } else if (s == 3.0) {
    for (auto& v : f.values) {
      const double a2 = std::norm(v);
      v *= std::polar(1.0, G * a2 * a2 * a2);
    }
  } else {
    for (auto& v : f.values)
      v *= std::polar(1.0, G * std::pow(std::norm(v), s));
  }
}

void TsspStepper::strang_step(ComplexField& f, double t, double dt) {
  kinetic_step(f, 0.5 * dt);
  nonlinear_step(f, t, dt);
  kinetic_step(f, 0.5 * dt);
}

}  // namespace nlsb
