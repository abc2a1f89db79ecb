#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlsb/diagnostics.hpp"
#include "nlsb/initial_data.hpp"
#include "nlsb/model.hpp"
#include "nlsb/theory.hpp"

namespace nlsb {

enum class Scheme { tssp, rs };
Scheme scheme_from_name(const std::string& name);
std::string to_string(Scheme s);

struct RefinePolicy {
  bool enabled = true;
  double t_star_tol = 0.02;  // relative gap between successive levels
  int max_levels = 4;        // dt halvings beyond the base dt
};

struct RunConfig {
  Scheme scheme = Scheme::tssp;
  int dim = 1;
  double L = 8.0;
  int Np = 4096;
  ProfileSpec profile;
  ModelParams model;
  double dt = 1e-4;
  double t_max = 0.0;        // 0 => default 3.0 (1D) / 1.5 (2D)
  int record_every = 0;      // 0 => default 1 (1D) / 10 (2D)
  RefinePolicy refine;
  double blowup_threshold = 1e4;

  double effective_t_max() const;
  int effective_record_every() const;
  void validate() const;
};

struct RunResult {
  BlowupVerdict verdict;
  std::vector<DiagRecord> series;  // finest level run
  double dt_used = 0.0;
  int levels_used = 1;
  double runtime_sec = 0.0;
};

// Integrates one configuration. With refinement enabled the run is repeated
// at dt/2 until two successive levels agree: blow-up times within
// refine.t_star_tol relative, or both levels cleanly global. A run that
// survives to t_max counts as a clean no-blow-up when max(kinetic) stays
// below 10x the median of the recorded kinetic values. Non-finite samples or
// solver failures turn into a blow-up verdict at the last finite recorded
// time with resolution_converged = false (unless a finer level resolves it).
RunResult run_single(const RunConfig& cfg);

enum class SweepAxis { lambda, chirp_a, delta, amplitude_C };
SweepAxis axis_from_name(const std::string& name);
std::string to_string(SweepAxis a);

struct SweepRow {
  double param = 0.0;
  BlowupVerdict verdict;
  int humps = 0;  // at blow-up, or at the final time for global runs
  std::optional<double> predicted_t_star;
  bool predicted_global = false;
  double runtime_sec = 0.0;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::lambda;
  std::vector<SweepRow> rows;
  std::optional<double> reference_t_star;
  bool has_prediction = false;
  MonotonicityReport report;
};

// Applies an axis value to a config (lambda/delta require the matching
// coupling mode; chirp_a also moves the conformal scale in lockstep when the
// coupling is conformal).
RunConfig with_axis_value(RunConfig base, SweepAxis axis, double value);

// Runs one point per value (strictly increasing) on a small worker pool.
// Row order is by value, independent of scheduling, and results are
// deterministic. Chirp sweeps on a critical-power or conformal-coupling base
// get a predicted_t_star column from an unchirped reference run (or from
// `reference_t_star` when the caller already has it).
SweepResult run_sweep(const RunConfig& base, SweepAxis axis,
                      const std::vector<double>& values, int workers = 1,
                      std::optional<double> reference_t_star = std::nullopt);

struct SchemeComparison {
  RunResult tssp;
  RunResult rs;
  // |t1-t2|/max(t1,t2) when both blow up; 0 when both are global; NaN when
  // the verdicts disagree.
  double rel_gap = 0.0;
};
SchemeComparison compare_schemes(const RunConfig& cfg);

}  // namespace nlsb
