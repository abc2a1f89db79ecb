#include "nlsb/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlsb/errors.hpp"

namespace nlsb {

ConformalOutcome predict_conformal(double T, double a) {
  if (!(T > 0.0)) throw std::invalid_argument("predict_conformal: T must be > 0");
  if (a == 0.0) throw std::invalid_argument("predict_conformal: a must be nonzero");
  ConformalOutcome out;
  if (a > 0.0 || a + T < 0.0) {
    out.blows_up = true;
    out.t_star = a * T / (a + T);
  }
  return out;
}

AdmissibleExponents admissible_exponents(int n, double sigma) {
  if (n < 1) throw std::invalid_argument("admissible_exponents: n must be >= 1");
  if (!(sigma >= 2.0 / n))
    throw std::invalid_argument("admissible_exponents: sigma below 2/n");
  if (n >= 3 && !(sigma < 2.0 / (n - 2)))
    throw std::invalid_argument("admissible_exponents: sigma not below 2/(n-2)");
  AdmissibleExponents e;
  e.r = e.s = 2.0 * sigma + 2.0;
  e.q = (4.0 * sigma + 4.0) / (n * sigma);
  e.k = 2.0 * sigma * (2.0 * sigma + 2.0) / (2.0 - (n - 2.0) * sigma);
  return e;
}

EnvelopeFit lambda_bound_envelope(
    const std::vector<std::pair<double, double>>& lambda_tstar, int n,
    double sigma) {
  if (lambda_tstar.size() < 3)
    throw std::invalid_argument("lambda_bound_envelope: need >= 3 points");
  const double l0 = lambda_tstar.front().first;
  bool degenerate = true;
  for (const auto& p : lambda_tstar)
    if (p.first != l0) { degenerate = false; break; }
  if (degenerate)
    throw std::invalid_argument("lambda_bound_envelope: all lambda equal");

  EnvelopeFit fit;
  fit.exponent_lower = -2.0 * sigma / (2.0 - (n - 2.0) * sigma);
  fit.exponent_upper = -0.5;

  std::vector<double> lx, ly;
  for (const auto& [lam, ts] : lambda_tstar) {
    if (!(lam > 0.0))
      throw std::invalid_argument("lambda_bound_envelope: lambda must be > 0");
    if (!(ts > 0.0))
      throw std::invalid_argument("lambda_bound_envelope: t_star must be > 0");
    lx.push_back(std::log(std::sqrt(1.0 + lam * lam)));  // log <lambda>
    ly.push_back(std::log(ts));
  }
  const std::size_t m = lx.size();

  // Pinned-exponent fits: intercept = mean(ly - e*lx).
  auto pinned = [&](double e, double& c, double& rmin, double& rmax) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += ly[i] - e * lx[i];
    mean /= static_cast<double>(m);
    c = std::exp(mean);
    rmin = 1e300; rmax = -1e300;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = ly[i] - (mean + e * lx[i]);
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
    }
  };
  pinned(fit.exponent_lower, fit.c_lower, fit.resid_lower_min,
         fit.resid_lower_max);
  pinned(fit.exponent_upper, fit.c_upper, fit.resid_upper_min,
         fit.resid_upper_max);

  // Free straight-line fit for the empirical slope.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += lx[i]; sy += ly[i]; sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
  }
  const double denom = m * sxx - sx * sx;
  fit.empirical_slope = (m * sxy - sx * sy) / denom;
  fit.empirical_intercept = (sy - fit.empirical_slope * sx) / m;

  const double tol = 0.05;
  fit.corridor_consistent =
      fit.empirical_slope >= fit.exponent_lower - tol &&
      fit.empirical_slope <= fit.exponent_upper + tol;
  return fit;
}

double damping_threshold_functional(const ComplexField& u0, int n,
                                    double sigma) {
  DiagnosticsEngine engine(u0.grid);
  const double m = std::sqrt(mass_sq(u0));             // ||u0||_2
  const double k = std::sqrt(engine.gradient_norm_sq(u0));  // ||grad u0||_2
  if (m == 0.0 || k == 0.0) return 0.0;
  const double e_mass = sigma * (2.0 - (n - 2.0) * sigma);
  const double e_grad = n * sigma * sigma;
  return std::pow(std::pow(m, e_mass) * std::pow(k, e_grad),
                  1.0 / (sigma + 1.0));
}

MonotonicityReport monotonicity_report(
    const std::vector<std::pair<double, BlowupVerdict>>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].first > rows[i - 1].first))
      throw std::invalid_argument(
          "monotonicity_report: params must be strictly increasing");

  MonotonicityReport rep;

  // Verdict transitions over the full row list.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].second.blew_up != rows[i - 1].second.blew_up)
      rep.verdict_transitions.emplace_back(rows[i - 1].first, rows[i].first);
  }
  // Boundary: prefer the damping-style transition (blow-up below, none above).
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].second.blew_up && !rows[i].second.blew_up) {
      rep.no_blowup_boundary = 0.5 * (rows[i - 1].first + rows[i].first);
      break;
    }
  }
  if (!rep.no_blowup_boundary && !rep.verdict_transitions.empty()) {
    const auto& tr = rep.verdict_transitions.front();
    rep.no_blowup_boundary = 0.5 * (tr.first + tr.second);
  }

  std::vector<std::pair<double, double>> pts;  // (param, t_star), blow-ups only
  for (const auto& [param, verdict] : rows)
    if (verdict.blew_up && verdict.t_star) pts.emplace_back(param, *verdict.t_star);
  rep.blowup_points = static_cast<int>(pts.size());
  if (pts.size() < 3) {
    rep.note = "fewer than 3 blow-up points; trend analysis skipped";
    return rep;
  }
  rep.valid = true;

  std::vector<int> sign;  // per adjacent pair
  int ups = 0, downs = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = pts[i].second - pts[i - 1].second;
    const int s = (d > 0.0) ? 1 : (d < 0.0 ? -1 : 0);
    sign.push_back(s);
    if (s > 0) ++ups;
    if (s < 0) ++downs;
  }

  if (ups > downs) rep.direction = 1;
  else if (downs > ups) rep.direction = -1;
  else rep.direction = (pts.back().second >= pts.front().second) ? 1 : -1;

  for (std::size_t i = 0; i < sign.size(); ++i) {
    if (sign[i] != 0 && sign[i] != rep.direction) {
      rep.violations.push_back({pts[i].first, pts[i + 1].first,
                                pts[i].second, pts[i + 1].second});
    }
  }

  // Maximal monotone prefix/suffix (pairs moving with a single direction).
  int prefix = 1;
  for (std::size_t i = 1; i < sign.size(); ++i) {
    if (sign[i] == sign[0] || sign[i] == 0) ++prefix;
    else break;
  }
  int suffix = 1;
  for (std::size_t i = sign.size() - 1; i-- > 0;) {
    if (sign[i] == sign[sign.size() - 1] || sign[i] == 0) ++suffix;
    else break;
  }
  rep.monotone_prefix_pairs = sign.empty() ? 0 : prefix;
  rep.monotone_suffix_pairs = sign.empty() ? 0 : suffix;
  return rep;
}

}  // namespace nlsb
