#include "nlsb/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace nlsb {

int count_humps(const ComplexField& f, double rel_floor) {
  const Grid& g = *f.grid;
  const int np = g.points_per_dim;
  std::vector<double> m(np);
  if (g.dim == 1) {
    for (int i = 0; i < np; ++i) m[i] = std::abs(f.values[i]);
  } else {
    const int mid = np / 2;  // y = 0 row
    for (int i = 0; i < np; ++i) m[i] = std::abs(f.values[g.index2(i, mid)]);
  }
  double peak = 0.0;
  for (double v : m) peak = std::max(peak, v);
  if (peak == 0.0) return 0;
  const double floor = rel_floor * peak;
  int count = 0;
  for (int i = 0; i < np; ++i) {
    const double prev = m[(i + np - 1) % np];
    const double next = m[(i + 1) % np];
    if (m[i] > prev && m[i] > next && m[i] > floor) ++count;
  }
  return count;
}

BlowupVerdict detect_blowup(const std::vector<DiagRecord>& series,
                            double threshold) {
  if (series.empty())
    throw std::invalid_argument("detect_blowup: empty series");
  if (!series.front().finite)
    throw std::invalid_argument("detect_blowup: non-finite initial record");

  BlowupVerdict v;
  const double kin0 = series.front().kinetic;
  const double pot0 = series.front().potential;
  const bool armed = kin0 > 0.0 && pot0 > 0.0;

  for (std::size_t i = 1; i < series.size(); ++i) {
    const DiagRecord& r = series[i];
    if (!r.finite) {
      v.blew_up = true;
      v.t_star = series[i - 1].t;
      v.humps_at_blowup = series[i - 1].humps;
      return v;
    }
    if (armed && r.kinetic >= threshold * kin0 &&
        r.potential >= threshold * pot0) {
      v.blew_up = true;
      v.t_star = r.t;
      v.humps_at_blowup = series[i - 1].humps;
      return v;
    }
  }
  return v;
}

DiagnosticsEngine::DiagnosticsEngine(std::shared_ptr<const Grid> grid)
    : grid_(grid), ft_(grid), lap_(laplacian_symbol(*grid)) {}

DiagRecord DiagnosticsEngine::measure(
    const ComplexField& f, double t, const ModelParams& p,
    const std::vector<std::complex<double>>* coeffs) {
  const Grid& g = *grid_;
  const double w = quad_weight(g);
  const int np = g.points_per_dim;

  DiagRecord r;
  r.t = t;

  double mass = 0.0, pot_pow = 0.0, var = 0.0;
  const double sp1 = p.sigma + 1.0;  // |u|^{2(sigma+1)} below
  const double sigma = p.sigma;
  auto nl_pow = [sigma, sp1](double a2) {
    if (sigma == 1.0) return a2 * a2;
    if (sigma == 2.0) return a2 * a2 * a2;
    if (sigma == 3.0) return a2 * a2 * a2 * a2;
    return std::pow(a2, sp1);
  };
  if (g.dim == 1) {
    for (int i = 0; i < np; ++i) {
      const double a2 = std::norm(f.values[i]);
      const double x = g.coord(i);
      mass += a2;
      var += x * x * a2;
      pot_pow += nl_pow(a2);
    }
  } else {
    for (int ix = 0; ix < np; ++ix) {
      const double x2 = g.coord(ix) * g.coord(ix);
      for (int iy = 0; iy < np; ++iy) {
        const double a2 = std::norm(f.values[g.index2(ix, iy)]);
        const double y = g.coord(iy);
        mass += a2;
        var += (x2 + y * y) * a2;
        pot_pow += nl_pow(a2);
      }
    }
  }
  r.mass_sq = mass * w;
  r.variance = var * w;

  if (coeffs) {
    double kin = 0.0;
    for (std::size_t j = 0; j < lap_.size(); ++j)
      kin += -lap_[j] * std::norm((*coeffs)[j]);
    const double vol = std::pow(2.0 * g.half_width, g.dim);
    r.kinetic = kin * vol;
  } else {
    r.kinetic = gradient_norm_sq(f);
  }

  r.potential = p.g(t) / sp1 * (pot_pow * w);
  r.total = r.kinetic - r.potential;
  r.humps = count_humps(f);
  r.finite = std::isfinite(r.mass_sq) && std::isfinite(r.kinetic) &&
             std::isfinite(r.potential) && std::isfinite(r.variance);
  return r;
}

double DiagnosticsEngine::gradient_norm_sq(const ComplexField& f) {
  ft_.forward(f.values, scratch_);
  double kin = 0.0;
  for (std::size_t j = 0; j < lap_.size(); ++j)
    kin += -lap_[j] * std::norm(scratch_[j]);
  return kin * std::pow(2.0 * grid_->half_width, grid_->dim);
}

double DiagnosticsEngine::j_quantity(const ComplexField& f, double t,
                                     double alpha, double sigma,
                                     double coeff) {
  const Grid& g = *grid_;
  const int np = g.points_per_dim;
  const double w = quad_weight(g);
  const double tau = t - alpha;

  ft_.forward(f.values, scratch_);

  double jnorm = 0.0;
  if (g.dim == 1) {
    deriv_.resize(scratch_.size());
    for (int j = 0; j < np; ++j)
      deriv_[j] = std::complex<double>(0.0, g.wavenumbers[j]) * scratch_[j];
    std::vector<std::complex<double>> dx_f;
    ft_.inverse(deriv_, dx_f);
    for (int i = 0; i < np; ++i) {
      const std::complex<double> jv =
          g.coord(i) * f.values[i] +
          std::complex<double>(0.0, 2.0 * tau) * dx_f[i];
      jnorm += std::norm(jv);
    }
  } else {
    deriv_.resize(scratch_.size());
    std::vector<std::complex<double>> d_f;
    for (int axis = 0; axis < 2; ++axis) {
      for (int jx = 0; jx < np; ++jx) {
        const double kx = g.wavenumbers[jx];
        for (int jy = 0; jy < np; ++jy) {
          const double k = (axis == 0) ? kx : g.wavenumbers[jy];
          deriv_[g.index2(jx, jy)] =
              std::complex<double>(0.0, k) * scratch_[g.index2(jx, jy)];
        }
      }
      ft_.inverse(deriv_, d_f);
      for (int ix = 0; ix < np; ++ix) {
        for (int iy = 0; iy < np; ++iy) {
          const std::size_t idx = g.index2(ix, iy);
          const double xc = (axis == 0) ? g.coord(ix) : g.coord(iy);
          const std::complex<double> jv =
              xc * f.values[idx] +
              std::complex<double>(0.0, 2.0 * tau) * d_f[idx];
          jnorm += std::norm(jv);
        }
      }
    }
  }
  jnorm *= w;

  const double pot_pow = lp_norm_pow(f, 2.0 * sigma + 2.0);
  return jnorm - 4.0 * tau * tau * coeff / (sigma + 1.0) * pot_pow;
}

}  // namespace nlsb
