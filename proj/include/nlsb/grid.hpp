#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace nlsb {

// Uniform periodic grid on [-L, L)^dim with dim in {1, 2} and Np points per
// axis (power of two, >= 8). Nodes are x_i = -L + i*dx with dx = 2L/Np.
// Wavenumbers follow the FFT-native layout
//   k_j = (pi/L) * j,  j = 0, 1, ..., Np/2-1, -Np/2, ..., -1,
// one table shared by both axes in 2D. Fields are stored row-major with the
// x index outermost: value(ix, iy) = values[ix*Np + iy].
struct Grid {
  int dim;
  double half_width;    // L
  int points_per_dim;   // Np
  double dx;
  std::vector<double> wavenumbers;

  std::size_t size() const;
  double coord(int i) const { return -half_width + i * dx; }
  std::size_t index2(int ix, int iy) const {
    return static_cast<std::size_t>(ix) * points_per_dim + iy;
  }
};

std::shared_ptr<const Grid> make_grid(int dim, double half_width,
                                      int points_per_dim);

struct ComplexField {
  std::shared_ptr<const Grid> grid;
  std::vector<std::complex<double>> values;
};

ComplexField make_field(std::shared_ptr<const Grid> g);

// -|k|^2 per node, same layout as the spectral coefficients.
std::vector<double> laplacian_symbol(const Grid& g);

// Forward/backward DFT pair with the forward scaled by 1/size, so
// inverse(forward(f)) == f to roundoff and Parseval reads
// sum |f_i|^2 dx^dim == (2L)^dim sum |c_j|^2. Plans and scratch are owned by
// the instance: never share one across threads (plan creation itself is
// serialised internally because the FFTW planner is not thread-safe).
class FourierTransform {
 public:
  explicit FourierTransform(std::shared_ptr<const Grid> g);
  ~FourierTransform();
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  const Grid& grid() const { return *grid_; }
  std::shared_ptr<const Grid> grid_ptr() const { return grid_; }

  void forward(const std::vector<std::complex<double>>& in,
               std::vector<std::complex<double>>& out);
  void inverse(const std::vector<std::complex<double>>& in,
               std::vector<std::complex<double>>& out);

 private:
  std::shared_ptr<const Grid> grid_;
  void* plan_fwd_ = nullptr;   // fftw_plan, kept opaque here
  void* plan_bwd_ = nullptr;
  std::complex<double>* buf_ = nullptr;  // fftw-aligned in-place buffer
};

// One-off conveniences for tests and setup code (each call builds a plan;
// too slow for inner loops).
std::vector<std::complex<double>> to_spectral(const ComplexField& f);
ComplexField from_spectral(std::shared_ptr<const Grid> g,
                           const std::vector<std::complex<double>>& coeffs);

// Rectangle-rule quadrature weight dx^dim (spectrally accurate here).
double quad_weight(const Grid& g);
double mass_sq(const ComplexField& f);               // integral of |f|^2
double lp_norm_pow(const ComplexField& f, double p); // integral of |f|^p

}  // namespace nlsb
