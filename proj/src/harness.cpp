#include "nlsb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <thread>

#include "nlsb/errors.hpp"
#include "nlsb/grid.hpp"
#include "nlsb/relaxation.hpp"
#include "nlsb/tssp.hpp"

namespace nlsb {

Scheme scheme_from_name(const std::string& name) {
  if (name == "tssp") return Scheme::tssp;
  if (name == "rs") return Scheme::rs;
  throw ConfigError("unknown scheme '" + name + "' (expected tssp or rs)");
}

std::string to_string(Scheme s) { return s == Scheme::tssp ? "tssp" : "rs"; }

SweepAxis axis_from_name(const std::string& name) {
  if (name == "lambda") return SweepAxis::lambda;
  if (name == "chirp_a") return SweepAxis::chirp_a;
  if (name == "delta") return SweepAxis::delta;
  if (name == "amplitude_C") return SweepAxis::amplitude_C;
  throw ConfigError("unknown sweep axis '" + name +
                    "' (expected lambda, chirp_a, delta or amplitude_C)");
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::lambda: return "lambda";
    case SweepAxis::chirp_a: return "chirp_a";
    case SweepAxis::delta: return "delta";
    case SweepAxis::amplitude_C: return "amplitude_C";
  }
  return "?";
}

double RunConfig::effective_t_max() const {
  if (t_max > 0.0) return t_max;
  return dim == 2 ? 1.5 : 3.0;
}

int RunConfig::effective_record_every() const {
  if (record_every > 0) return record_every;
  return dim == 2 ? 10 : 1;
}

void RunConfig::validate() const {
  model.validate();
  profile.validate();
  if (dim != profile_dim(profile.kind))
    throw ConfigError("profile '" + to_string(profile.kind) + "' needs dim=" +
                      std::to_string(profile_dim(profile.kind)));
  if (model.n != dim)
    throw ConfigError("model dimension n must match the grid dimension");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
  if (t_max < 0.0 || !std::isfinite(t_max))
    throw ConfigError("t_max must be nonnegative");
  if (record_every < 0) throw ConfigError("record_every must be nonnegative");
  if (!(blowup_threshold > 1.0))
    throw ConfigError("blowup_threshold must exceed 1");
  if (refine.enabled) {
    if (!(refine.t_star_tol > 0.0))
      throw ConfigError("refine.t_star_tol must be positive");
    if (refine.max_levels < 1 || refine.max_levels > 12)
      throw ConfigError("refine.max_levels must be in [1,12]");
  }
  make_grid(dim, L, Np);  // grid sanity (throws ConfigError)
}

namespace {

struct LevelOutcome {
  std::vector<DiagRecord> series;
  bool blew_up = false;
  double t_star = 0.0;
  int humps = 0;
  bool solver_failed = false;  // non-finite state or linear-solver failure
  bool clean = false;          // survived with quiet kinetic history
};

// Kinetic-quietness test for a run that reached t_max: every recorded kinetic
// energy must stay within 10x the running median of the records seen so far.
// The running median catches a growth phase while the history is still quiet;
// a grid-saturated collapse that plateaus high would drag a whole-run median
// up with it and slip through. Incipient blow-up that has not yet crossed
// blowup_threshold fails this and forces refinement.
bool kinetic_quiet(const std::vector<DiagRecord>& series) {
  if (series.empty()) return false;
  std::multiset<double> low, high;  // lower half (max at rbegin) / upper half
  for (const auto& r : series) {
    const double k = r.kinetic;
    if (low.empty() || k <= *low.rbegin())
      low.insert(k);
    else
      high.insert(k);
    if (low.size() > high.size() + 1) {
      high.insert(*low.rbegin());
      low.erase(std::prev(low.end()));
    } else if (high.size() > low.size()) {
      low.insert(*high.begin());
      high.erase(high.begin());
    }
    if (k > 10.0 * *low.rbegin()) return false;  // lower median of history
  }
  return true;
}

LevelOutcome run_level(const RunConfig& cfg, double dt,
                       const std::shared_ptr<const Grid>& grid,
                       const ComplexField& u0) {
  LevelOutcome out;
  const double horizon = cfg.model.coupling_horizon();
  const double t_end = std::min(cfg.effective_t_max(), horizon * (1.0 - 1e-12));
  // Floor with a one-ulp nudge: an exact t_end/dt keeps its full step count
  // while a finite coupling horizon is never overstepped.
  const long long max_steps = static_cast<long long>(
      std::floor(t_end / dt * (1.0 + 4e-16) + 1e-12));
  const int rec = cfg.effective_record_every();

  DiagnosticsEngine diag(grid);
  const double thr = cfg.blowup_threshold;

  DiagRecord r0 = diag.measure(u0, 0.0, cfg.model);
  out.series.push_back(r0);
  if (!r0.finite) throw ConfigError("initial data is not finite");
  const bool armed = r0.kinetic > 0.0 && r0.potential > 0.0;
  const double kin_gate = thr * r0.kinetic;
  const double pot_gate = thr * r0.potential;

  auto on_record = [&](const DiagRecord& r) -> bool {  // true => stop
    out.series.push_back(r);
    if (!r.finite) {
      const DiagRecord& prev = out.series[out.series.size() - 2];
      out.blew_up = true;
      out.solver_failed = true;
      out.t_star = prev.t;
      out.humps = prev.humps;
      return true;
    }
    if (armed && r.kinetic >= kin_gate && r.potential >= pot_gate) {
      const DiagRecord& prev = out.series[out.series.size() - 2];
      out.blew_up = true;
      out.t_star = r.t;
      out.humps = prev.humps;
      return true;
    }
    return false;
  };

  auto on_solver_failure = [&]() {
    const DiagRecord& prev = out.series.back();
    out.blew_up = true;
    out.solver_failed = true;
    out.t_star = prev.t;
    out.humps = prev.humps;
  };

  if (cfg.scheme == Scheme::tssp) {
    TsspStepper stepper(grid, cfg.model);
    ComplexField u = u0;
    for (long long n = 0; n < max_steps;) {
      const double t = static_cast<double>(n) * dt;
      try {
        stepper.strang_step(u, t, dt);
      } catch (const SolverError&) {
        on_solver_failure();
        break;
      }
      ++n;
      if (n % rec == 0 || n == max_steps) {
        const double tn = static_cast<double>(n) * dt;
        DiagRecord r =
            diag.measure(u, tn, cfg.model,
                         stepper.last_coeffs_valid() ? &stepper.last_coeffs()
                                                     : nullptr);
        if (on_record(r)) break;
      }
    }
  } else {
    RelaxationStepper stepper(grid, cfg.model, dt);
    RsState state = stepper.init(u0);
    for (long long n = 0; n < max_steps;) {
      try {
        stepper.step(state);
      } catch (const SolverError&) {
        on_solver_failure();
        break;
      }
      ++n;
      if (n % rec == 0 || n == max_steps) {
        const double tn = static_cast<double>(n) * dt;
        DiagRecord r = diag.measure(state.u, tn, cfg.model);
        if (on_record(r)) break;
      }
    }
  }

  if (!out.blew_up) out.clean = kinetic_quiet(out.series);
  return out;
}

}  // namespace

RunResult run_single(const RunConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  auto grid = make_grid(cfg.dim, cfg.L, cfg.Np);
  ComplexField u0 = build_initial(cfg.profile, grid);

  const int max_levels = cfg.refine.enabled ? cfg.refine.max_levels : 0;
  const double tol = cfg.refine.t_star_tol;

  LevelOutcome cur = run_level(cfg, cfg.dt, grid, u0);
  double dt_used = cfg.dt;
  int levels_used = 1;
  bool converged = !cur.blew_up && cur.clean;

  for (int level = 1; level <= max_levels && !converged; ++level) {
    const LevelOutcome prev = std::move(cur);
    const double dt_fine = cfg.dt / static_cast<double>(1LL << level);
    cur = run_level(cfg, dt_fine, grid, u0);
    dt_used = dt_fine;
    ++levels_used;
    if (prev.blew_up && cur.blew_up && !prev.solver_failed &&
        !cur.solver_failed && cur.t_star > 0.0 &&
        std::abs(prev.t_star - cur.t_star) <= tol * cur.t_star) {
      converged = true;
    } else if (!prev.blew_up && !cur.blew_up && cur.clean) {
      converged = true;
    }
  }

  RunResult res;
  res.series = std::move(cur.series);
  res.verdict.blew_up = cur.blew_up;
  if (cur.blew_up) {
    res.verdict.t_star = cur.t_star;
    res.verdict.humps_at_blowup = cur.humps;
  }
  res.verdict.resolution_converged = converged;
  res.dt_used = dt_used;
  res.levels_used = levels_used;
  res.runtime_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

RunConfig with_axis_value(RunConfig base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::lambda:
      if (base.model.coupling.kind != CouplingMode::Kind::constant)
        throw ConfigError("lambda sweep needs constant coupling");
      base.model.coupling.lambda = value;
      break;
    case SweepAxis::delta:
      if (base.model.coupling.kind != CouplingMode::Kind::damped)
        throw ConfigError("delta sweep needs damped coupling");
      base.model.coupling.delta = value;
      break;
    case SweepAxis::chirp_a:
      base.profile.chirp_a = value;
      if (base.model.coupling.kind == CouplingMode::Kind::conformal)
        base.model.coupling.conformal_a = value;
      break;
    case SweepAxis::amplitude_C:
      base.profile.amplitude = value;
      break;
  }
  return base;
}

SweepResult run_sweep(const RunConfig& base, SweepAxis axis,
                      const std::vector<double>& values, int workers,
                      std::optional<double> reference_t_star) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1]))
      throw ConfigError("sweep values must be strictly increasing");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  with_axis_value(base, axis, values.front()).validate();

  SweepResult res;
  res.axis = axis;
  res.has_prediction =
      axis == SweepAxis::chirp_a &&
      (base.model.critical() ||
       base.model.coupling.kind == CouplingMode::Kind::conformal);

  if (res.has_prediction) {
    if (reference_t_star) {
      res.reference_t_star = reference_t_star;
    } else {
      // Unchirped reference in the original variables; a conformal coupling
      // is the transformed image of the plain lambda=1 equation.
      RunConfig ref = base;
      ref.profile.chirp_a.reset();
      if (ref.model.coupling.kind == CouplingMode::Kind::conformal)
        ref.model.coupling = CouplingMode::constant(1.0);
      RunResult rr = run_single(ref);
      if (rr.verdict.blew_up) res.reference_t_star = rr.verdict.t_star;
    }
  }

  res.rows.resize(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= values.size()) return;
      try {
        RunConfig cfg = with_axis_value(base, axis, values[i]);
        RunResult rr = run_single(cfg);
        SweepRow& row = res.rows[i];
        row.param = values[i];
        row.verdict = rr.verdict;
        row.runtime_sec = rr.runtime_sec;
        if (rr.verdict.blew_up) {
          row.humps = rr.verdict.humps_at_blowup.value_or(0);
        } else if (!rr.series.empty()) {
          row.humps = rr.series.back().humps;
        }
        if (res.reference_t_star) {
          ConformalOutcome pred =
              predict_conformal(*res.reference_t_star, values[i]);
          row.predicted_global = !pred.blows_up;
          row.predicted_t_star = pred.t_star;
        }
      } catch (...) {
        errors[i] = std::current_exception();
        return;
      }
    }
  };

  const int pool = std::min<int>(workers, static_cast<int>(values.size()));
  std::vector<std::thread> threads;
  for (int w = 1; w < pool; ++w) threads.emplace_back(work);
  work();
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::pair<double, BlowupVerdict>> points;
  points.reserve(res.rows.size());
  for (const auto& row : res.rows) points.emplace_back(row.param, row.verdict);
  res.report = monotonicity_report(points);
  return res;
}

SchemeComparison compare_schemes(const RunConfig& cfg) {
  SchemeComparison cmp;
  RunConfig a = cfg;
  a.scheme = Scheme::tssp;
  cmp.tssp = run_single(a);
  RunConfig b = cfg;
  b.scheme = Scheme::rs;
  cmp.rs = run_single(b);
  const bool b1 = cmp.tssp.verdict.blew_up, b2 = cmp.rs.verdict.blew_up;
  if (b1 && b2) {
    const double t1 = *cmp.tssp.verdict.t_star, t2 = *cmp.rs.verdict.t_star;
    cmp.rel_gap = std::abs(t1 - t2) / std::max(t1, t2);
  } else if (!b1 && !b2) {
    cmp.rel_gap = 0.0;
  } else {
    cmp.rel_gap = std::numeric_limits<double>::quiet_NaN();
  }
  return cmp;
}

}  // namespace nlsb
