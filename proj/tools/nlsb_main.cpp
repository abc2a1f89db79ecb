#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlsb/catalog.hpp"
#include "nlsb/config.hpp"
#include "nlsb/csv.hpp"
#include "nlsb/errors.hpp"
#include "nlsb/harness.hpp"

namespace {

using nlsb::format_double;

// Raw CLI overrides; they are spliced into the ConfigMap as strings so file
// values, flag values and defaults all flow through the same assembly code.
struct Flags {
  std::string config_path;

  std::optional<std::string> scheme;
  std::optional<double> dt, t_max, blowup_threshold;
  std::optional<int> record_every;

  std::optional<int> dim, np;
  std::optional<double> L;

  std::optional<std::string> profile, phase;
  std::optional<double> C, phase_shift, chirp_a;

  std::optional<int> n;
  std::optional<double> sigma, lambda, delta, conformal_a;
  std::optional<std::string> coupling;

  std::optional<bool> refine;
  std::optional<double> t_star_tol;
  std::optional<int> max_levels;
};

void add_config_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "config file (key = value)");
  cmd->add_option("--scheme", f.scheme, "tssp or rs");
  cmd->add_option("--dt", f.dt, "base time step");
  cmd->add_option("--t-max", f.t_max, "time horizon");
  cmd->add_option("--record-every", f.record_every, "diagnostic cadence");
  cmd->add_option("--blowup-threshold", f.blowup_threshold,
                  "energy growth factor that triggers the detector");
  cmd->add_option("--dim", f.dim, "space dimension (1 or 2)");
  cmd->add_option("--L", f.L, "box half-width");
  cmd->add_option("--np", f.np, "grid points per axis (power of two)");
  cmd->add_option("--profile", f.profile, "initial profile kind");
  cmd->add_option("-C,--amplitude", f.C, "profile amplitude");
  cmd->add_option("--phase", f.phase, "phase kind");
  cmd->add_option("--phase-shift", f.phase_shift, "phase shift s");
  cmd->add_option("--chirp-a", f.chirp_a, "quadratic chirp scale a");
  cmd->add_option("--n", f.n, "model dimension");
  cmd->add_option("--sigma", f.sigma, "nonlinearity exponent");
  cmd->add_option("--coupling", f.coupling, "constant, damped or conformal");
  cmd->add_option("--lambda", f.lambda, "constant coupling strength");
  cmd->add_option("--delta", f.delta, "damping rate");
  cmd->add_option("--conformal-a", f.conformal_a, "conformal coupling scale");
  cmd->add_flag("--refine,!--no-refine", f.refine,
                "time-step refinement until t* converges");
  cmd->add_option("--t-star-tol", f.t_star_tol,
                  "relative t* agreement between refinement levels");
  cmd->add_option("--max-levels", f.max_levels, "refinement level cap");
}

nlsb::RunConfig make_config(const Flags& f) {
  nlsb::ConfigMap map;
  if (!f.config_path.empty()) map = nlsb::load_config_file(f.config_path);

  auto set_d = [&map](const char* sec, const char* key,
                      const std::optional<double>& v) {
    if (v) map[sec][key] = format_double(*v);
  };
  auto set_i = [&map](const char* sec, const char* key,
                      const std::optional<int>& v) {
    if (v) map[sec][key] = std::to_string(*v);
  };
  auto set_s = [&map](const char* sec, const char* key,
                      const std::optional<std::string>& v) {
    if (v) map[sec][key] = *v;
  };

  set_s("", "scheme", f.scheme);
  set_d("", "dt", f.dt);
  set_d("", "t_max", f.t_max);
  set_i("", "record_every", f.record_every);
  set_d("", "blowup_threshold", f.blowup_threshold);
  set_i("grid", "dim", f.dim);
  set_d("grid", "L", f.L);
  set_i("grid", "Np", f.np);
  set_s("profile", "kind", f.profile);
  set_d("profile", "C", f.C);
  set_s("profile", "phase", f.phase);
  set_d("profile", "phase_shift", f.phase_shift);
  set_d("profile", "chirp_a", f.chirp_a);
  set_i("model", "n", f.n);
  set_d("model", "sigma", f.sigma);
  set_s("model", "coupling", f.coupling);
  set_d("model", "lambda", f.lambda);
  set_d("model", "delta", f.delta);
  set_d("model", "conformal_a", f.conformal_a);
  if (f.refine) map["refine"]["enabled"] = *f.refine ? "true" : "false";
  set_d("refine", "t_star_tol", f.t_star_tol);
  set_i("refine", "max_levels", f.max_levels);

  return nlsb::config_from_map(map);
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty() || dir == ".") return name;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

void print_verdict(const std::string& label, const nlsb::RunResult& r) {
  std::ostringstream os;
  os << label << ": ";
  if (r.verdict.blew_up)
    os << "blow-up at t* = " << format_double(*r.verdict.t_star) << " ("
       << r.verdict.humps_at_blowup.value_or(0) << " hump(s))";
  else
    os << "no blow-up";
  os << (r.verdict.resolution_converged ? ", resolution converged"
                                        : ", NOT resolution converged")
     << ", dt = " << format_double(r.dt_used) << ", levels = "
     << r.levels_used;
  std::cout << os.str() << '\n';
}

void write_sweep_outputs(const nlsb::SweepResult& sweep,
                         const std::string& out_dir) {
  {
    std::ostringstream os;
    nlsb::write_sweep_csv(os, sweep);
    const std::string path = join_path(out_dir, "sweep.csv");
    nlsb::write_file(path, os.str());
    std::cout << "wrote " << path << '\n';
  }
  {
    std::ostringstream os;
    nlsb::write_report_txt(os, sweep);
    const std::string path = join_path(out_dir, "report.txt");
    nlsb::write_file(path, os.str());
    std::cout << "wrote " << path << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Blow-up experiments for focusing NLS equations with "
      "time-dependent coupling"};
  app.require_subcommand(1);

  Flags flags;

  auto* cmd_run = app.add_subcommand("run", "integrate a single configuration");
  add_config_flags(cmd_run, flags);
  std::string run_out = "diag.csv";
  cmd_run->add_option("--out", run_out, "diagnostic series output path");

  auto* cmd_sweep = app.add_subcommand("sweep", "sweep one parameter axis");
  add_config_flags(cmd_sweep, flags);
  std::string sweep_axis;
  std::vector<double> sweep_values;
  int sweep_workers = 1;
  std::string sweep_out_dir = ".";
  cmd_sweep->add_option("--axis", sweep_axis,
                        "lambda, chirp_a, delta or amplitude_C")
      ->required();
  cmd_sweep->add_option("--values", sweep_values, "axis values, ascending")
      ->required()
      ->delimiter(',');
  cmd_sweep->add_option("--workers", sweep_workers, "worker pool width");
  cmd_sweep->add_option("--out-dir", sweep_out_dir, "output directory");

  auto* cmd_predict =
      app.add_subcommand("predict", "tabulate the conformal blow-up-time map");
  double predict_T = 0.0;
  std::vector<double> predict_a;
  std::string predict_out;
  cmd_predict->add_option("--T", predict_T, "unchirped blow-up time")
      ->required();
  cmd_predict->add_option("--a", predict_a, "chirp scales")
      ->required()
      ->delimiter(',');
  cmd_predict->add_option("--out", predict_out, "output path (default stdout)");

  auto* cmd_compare =
      app.add_subcommand("compare", "run both schemes and report the t* gap");
  add_config_flags(cmd_compare, flags);
  std::string compare_out_dir = ".";
  cmd_compare->add_option("--out-dir", compare_out_dir, "output directory");

  auto* cmd_catalog =
      app.add_subcommand("catalog", "execute a named experiment (or 'list')");
  std::string catalog_name;
  std::string catalog_out_dir = ".";
  nlsb::CatalogOverrides overrides;
  cmd_catalog->add_option("name", catalog_name, "entry name or 'list'")
      ->required();
  cmd_catalog->add_option("--out-dir", catalog_out_dir, "output directory");
  std::optional<int> cat_np, cat_rec, cat_levels;
  std::optional<double> cat_dt, cat_tmax;
  bool cat_no_refine = false;
  int cat_workers = 1;
  cmd_catalog->add_option("--np", cat_np, "grid points per axis override");
  cmd_catalog->add_option("--dt", cat_dt, "base time step override");
  cmd_catalog->add_option("--t-max", cat_tmax, "time horizon override");
  cmd_catalog->add_option("--record-every", cat_rec, "cadence override");
  cmd_catalog->add_option("--max-levels", cat_levels,
                          "refinement level cap override");
  cmd_catalog->add_flag("--no-refine", cat_no_refine,
                        "disable time-step refinement");
  cmd_catalog->add_option("--workers", cat_workers, "worker pool width");

  try {
    app.parse(argc, argv);

    if (cmd_run->parsed()) {
      nlsb::RunConfig cfg = make_config(flags);
      nlsb::RunResult res = nlsb::run_single(cfg);
      std::ostringstream os;
      nlsb::write_diag_csv(os, res.series);
      nlsb::write_file(run_out, os.str());
      print_verdict("run", res);
      std::cout << "wrote " << run_out << '\n';
    } else if (cmd_sweep->parsed()) {
      nlsb::RunConfig cfg = make_config(flags);
      nlsb::SweepResult sweep = nlsb::run_sweep(
          cfg, nlsb::axis_from_name(sweep_axis), sweep_values, sweep_workers);
      write_sweep_outputs(sweep, sweep_out_dir);
    } else if (cmd_predict->parsed()) {
      std::ostringstream os;
      os << "a,blows_up,predicted_t_star\n";
      for (double a : predict_a) {
        nlsb::ConformalOutcome oc = nlsb::predict_conformal(predict_T, a);
        os << format_double(a) << ',' << (oc.blows_up ? 1 : 0) << ',';
        if (oc.t_star) os << format_double(*oc.t_star);
        os << '\n';
      }
      if (predict_out.empty()) {
        std::cout << os.str();
      } else {
        nlsb::write_file(predict_out, os.str());
        std::cout << "wrote " << predict_out << '\n';
      }
    } else if (cmd_compare->parsed()) {
      nlsb::RunConfig cfg = make_config(flags);
      nlsb::SchemeComparison cmp = nlsb::compare_schemes(cfg);
      for (const auto& [label, rr] :
           {std::pair<std::string, const nlsb::RunResult&>("tssp", cmp.tssp),
            std::pair<std::string, const nlsb::RunResult&>("rs", cmp.rs)}) {
        std::ostringstream os;
        nlsb::write_diag_csv(os, rr.series);
        const std::string path =
            join_path(compare_out_dir, label + "_diag.csv");
        nlsb::write_file(path, os.str());
        print_verdict(label, rr);
        std::cout << "wrote " << path << '\n';
      }
      std::cout << "relative t* gap: " << format_double(cmp.rel_gap) << '\n';
    } else if (cmd_catalog->parsed()) {
      if (catalog_name == "list") {
        for (const auto& e : nlsb::catalog_entries())
          std::cout << e.name << "  " << e.description << '\n';
        return 0;
      }
      overrides.np = cat_np;
      overrides.dt = cat_dt;
      overrides.t_max = cat_tmax;
      overrides.record_every = cat_rec;
      overrides.max_levels = cat_levels;
      if (cat_no_refine) overrides.refine = false;
      overrides.workers = cat_workers;
      nlsb::CatalogResult res = nlsb::run_catalog(catalog_name, overrides);
      write_sweep_outputs(res.sweep, catalog_out_dir);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nlsb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const nlsb::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
