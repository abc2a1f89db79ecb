#include "nlsb/grid.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "nlsb/errors.hpp"

namespace nlsb {

namespace {
// The FFTW planner mutates global state; serialise plan create/destroy.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::size_t Grid::size() const {
  std::size_t n = static_cast<std::size_t>(points_per_dim);
  return dim == 1 ? n : n * n;
}

std::shared_ptr<const Grid> make_grid(int dim, double half_width,
                                      int points_per_dim) {
  if (dim != 1 && dim != 2)
    throw ConfigError("grid: dim must be 1 or 2");
  if (!(half_width > 0.0))
    throw ConfigError("grid: half_width must be positive");
  if (points_per_dim < 8 ||
      !std::has_single_bit(static_cast<unsigned>(points_per_dim)))
    throw ConfigError("grid: points_per_dim must be a power of two >= 8");

  auto g = std::make_shared<Grid>();
  g->dim = dim;
  g->half_width = half_width;
  g->points_per_dim = points_per_dim;
  g->dx = 2.0 * half_width / points_per_dim;
  g->wavenumbers.resize(points_per_dim);
  const double base = M_PI / half_width;
  const int half = points_per_dim / 2;
  for (int j = 0; j < points_per_dim; ++j) {
    const int m = (j < half) ? j : j - points_per_dim;
    g->wavenumbers[j] = base * m;
  }
  return g;
}

ComplexField make_field(std::shared_ptr<const Grid> g) {
  ComplexField f;
  f.values.assign(g->size(), {0.0, 0.0});
  f.grid = std::move(g);
  return f;
}

std::vector<double> laplacian_symbol(const Grid& g) {
  const int np = g.points_per_dim;
  std::vector<double> sym(g.size());
  if (g.dim == 1) {
    for (int j = 0; j < np; ++j) {
      const double k = g.wavenumbers[j];
      sym[j] = -k * k;
    }
  } else {
    for (int jx = 0; jx < np; ++jx) {
      const double kx = g.wavenumbers[jx];
      for (int jy = 0; jy < np; ++jy) {
        const double ky = g.wavenumbers[jy];
        sym[g.index2(jx, jy)] = -(kx * kx + ky * ky);
      }
    }
  }
  return sym;
}

FourierTransform::FourierTransform(std::shared_ptr<const Grid> g)
    : grid_(std::move(g)) {
  const std::size_t n = grid_->size();
  buf_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  if (!buf_) throw std::bad_alloc();
  auto* raw = reinterpret_cast<fftw_complex*>(buf_);
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_ESTIMATE keeps planning deterministic (FFTW_MEASURE is
  // timing-dependent and would make repeated runs diverge bitwise).
  if (grid_->dim == 1) {
    plan_fwd_ = fftw_plan_dft_1d(grid_->points_per_dim, raw, raw,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(grid_->points_per_dim, raw, raw,
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
  } else {
    plan_fwd_ = fftw_plan_dft_2d(grid_->points_per_dim, grid_->points_per_dim,
                                 raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_2d(grid_->points_per_dim, grid_->points_per_dim,
                                 raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan_fwd_ || !plan_bwd_)
    throw std::runtime_error("fftw plan creation failed");
}

FourierTransform::~FourierTransform() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  if (buf_) fftw_free(buf_);
}

void FourierTransform::forward(const std::vector<std::complex<double>>& in,
                               std::vector<std::complex<double>>& out) {
  const std::size_t n = grid_->size();
  if (in.size() != n)
    throw std::invalid_argument("forward: field size does not match grid");
  for (std::size_t i = 0; i < n; ++i) buf_[i] = in[i];
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  out.resize(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = buf_[i] * scale;
}

void FourierTransform::inverse(const std::vector<std::complex<double>>& in,
                               std::vector<std::complex<double>>& out) {
  const std::size_t n = grid_->size();
  if (in.size() != n)
    throw std::invalid_argument("inverse: coefficient size does not match grid");
  for (std::size_t i = 0; i < n; ++i) buf_[i] = in[i];
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = buf_[i];
}

std::vector<std::complex<double>> to_spectral(const ComplexField& f) {
  FourierTransform ft(f.grid);
  std::vector<std::complex<double>> c;
  ft.forward(f.values, c);
  return c;
}

ComplexField from_spectral(std::shared_ptr<const Grid> g,
                           const std::vector<std::complex<double>>& coeffs) {
  FourierTransform ft(g);
  ComplexField f;
  f.grid = std::move(g);
  ft.inverse(coeffs, f.values);
  return f;
}

double quad_weight(const Grid& g) {
  return g.dim == 1 ? g.dx : g.dx * g.dx;
}

double mass_sq(const ComplexField& f) {
  double s = 0.0;
  for (const auto& v : f.values) s += std::norm(v);
  return s * quad_weight(*f.grid);
}

double lp_norm_pow(const ComplexField& f, double p) {
  double s = 0.0;
  if (p == 2.0) return mass_sq(f);
  const double half_p = 0.5 * p;
  for (const auto& v : f.values) s += std::pow(std::norm(v), half_p);
  return s * quad_weight(*f.grid);
}

}  // namespace nlsb
