#pragma once

#include <optional>
#include <vector>

#include "nlsb/grid.hpp"
#include "nlsb/model.hpp"

namespace nlsb {

struct DiagRecord {
  double t = 0.0;
  double mass_sq = 0.0;    // ||u||_2^2 (quadrature)
  double kinetic = 0.0;    // ||grad u||_2^2 (spectral, Parseval-normalised)
  double potential = 0.0;  // g(t)/(sigma+1) * ||u||_{2s+2}^{2s+2}
  double total = 0.0;      // kinetic - potential
  double variance = 0.0;   // integral |x|^2 |u|^2
  int humps = 0;
  bool finite = true;
};

struct BlowupVerdict {
  bool blew_up = false;
  std::optional<double> t_star;
  std::optional<int> humps_at_blowup;  // from the last pre-threshold record
  bool resolution_converged = false;
};

// Number of strict local maxima of |f| exceeding rel_floor * max|f|,
// periodic neighbours. In 2D the scan runs along the x mid-line y = 0.
int count_humps(const ComplexField& f, double rel_floor = 0.1);

// First recorded time where BOTH kinetic >= threshold * kinetic(0) and
// potential >= threshold * potential(0). No interpolation: t_star is the
// crossing record's t. A non-finite record counts as a crossing at the last
// finite record's time. If kinetic(0) or potential(0) is zero the detector
// never fires (defocusing-free flows cannot blow up). resolution_converged
// is left false; the harness owns that flag.
BlowupVerdict detect_blowup(const std::vector<DiagRecord>& series,
                            double threshold = 1e4);

// Owns the transform used for spectral diagnostics; one instance per thread.
class DiagnosticsEngine {
 public:
  explicit DiagnosticsEngine(std::shared_ptr<const Grid> grid);

  // Full record at time t. When `coeffs` is non-null it must hold the
  // spectral coefficients of f (forward-scaled); the kinetic term then skips
  // its FFT.
  DiagRecord measure(const ComplexField& f, double t, const ModelParams& p,
                     const std::vector<std::complex<double>>* coeffs = nullptr);

  // ||grad f||_2^2 via the Parseval sum.
  double gradient_norm_sq(const ComplexField& f);

  // || (x + 2i(t-alpha) grad) f ||^2
  //   - 4 (t-alpha)^2 * coeff/(sigma+1) * ||f||_{2s+2}^{2s+2}.
  // coeff carries the effective coupling (g(t) or 1). Conserved by the flow
  // at critical power with constant unit coupling.
  double j_quantity(const ComplexField& f, double t, double alpha,
                    double sigma, double coeff);

 private:
  std::shared_ptr<const Grid> grid_;
  FourierTransform ft_;
  std::vector<double> lap_;
  std::vector<std::complex<double>> scratch_, deriv_;
};

}  // namespace nlsb
