#include <sstream>

#include "doctest.h"
#include "nlsb/config.hpp"
#include "nlsb/csv.hpp"
#include "nlsb/errors.hpp"

using namespace nlsb;

TEST_SUITE("config_csv") {

TEST_CASE("parser handles sections, comments and whitespace") {
  ConfigMap m = parse_config_text(
      "# leading comment\n"
      "scheme = rs\n"
      "dt = 1e-5   ; trailing comment\n"
      "\n"
      "[grid]\n"
      "  dim = 2\n"
      "  L=4.5\n"
      "[model]\n"
      "coupling = damped\n");
  CHECK(m.at("").at("scheme") == "rs");
  CHECK(m.at("").at("dt") == "1e-5");
  CHECK(m.at("grid").at("dim") == "2");
  CHECK(m.at("grid").at("L") == "4.5");
  CHECK(m.at("model").at("coupling") == "damped");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_config_text("[grid\nL = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("just a token\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("= 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[]\n"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("scalar parsing") {
  CHECK(parse_double("k", "2.5e-3") == doctest::Approx(2.5e-3));
  CHECK_THROWS_AS(parse_double("k", "abc"), ConfigError);
  CHECK_THROWS_AS(parse_double("k", "1.5x"), ConfigError);
  CHECK(parse_int("k", "-12") == -12);
  CHECK_THROWS_AS(parse_int("k", "1.5"), ConfigError);
  CHECK(parse_bool("k", "true"));
  CHECK(parse_bool("k", "1"));
  CHECK_FALSE(parse_bool("k", "off"));
  CHECK_THROWS_AS(parse_bool("k", "maybe"), ConfigError);
}

TEST_CASE("defaults survive an empty map") {
  RunConfig cfg = config_from_map({});
  CHECK(cfg.scheme == Scheme::tssp);
  CHECK(cfg.dim == 1);
  CHECK(cfg.Np == 4096);
  CHECK(cfg.L == 8.0);
  CHECK(cfg.profile.kind == ProfileKind::single_gauss);
  CHECK(cfg.profile.phase == PhaseKind::log_cosh);  // kind default
  CHECK(cfg.model.sigma == 2.0);
  CHECK(cfg.blowup_threshold == 1e4);
  CHECK(cfg.refine.enabled);
  CHECK(cfg.refine.t_star_tol == 0.02);
  CHECK(cfg.refine.max_levels == 4);
  CHECK(cfg.effective_t_max() == 3.0);
  CHECK(cfg.effective_record_every() == 1);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("full config round-trip") {
  RunConfig cfg = config_from_map(parse_config_text(
      "scheme = rs\n"
      "dt = 5e-5\n"
      "t_max = 2.5\n"
      "record_every = 7\n"
      "blowup_threshold = 1e3\n"
      "[grid]\n"
      "dim = 1\nL = 12\nNp = 2048\n"
      "[profile]\n"
      "kind = two_hump\nC = 4.25\nchirp_a = -0.5\n"
      "[model]\n"
      "n = 1\nsigma = 3\ncoupling = damped\ndelta = 0.9\n"
      "[refine]\n"
      "enabled = false\nt_star_tol = 0.05\nmax_levels = 2\n"));
  CHECK(cfg.scheme == Scheme::rs);
  CHECK(cfg.dt == 5e-5);
  CHECK(cfg.t_max == 2.5);
  CHECK(cfg.record_every == 7);
  CHECK(cfg.blowup_threshold == 1e3);
  CHECK(cfg.L == 12.0);
  CHECK(cfg.Np == 2048);
  CHECK(cfg.profile.kind == ProfileKind::two_hump);
  CHECK(cfg.profile.amplitude == 4.25);
  CHECK(cfg.profile.phase == PhaseKind::log_cosh);
  REQUIRE(cfg.profile.chirp_a.has_value());
  CHECK(*cfg.profile.chirp_a == -0.5);
  CHECK(cfg.model.sigma == 3.0);
  CHECK(cfg.model.coupling.kind == CouplingMode::Kind::damped);
  CHECK(cfg.model.coupling.delta == 0.9);
  CHECK_FALSE(cfg.refine.enabled);
  CHECK(cfg.refine.t_star_tol == 0.05);
  CHECK(cfg.refine.max_levels == 2);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("unknown keys are rejected, not ignored") {
  CHECK_THROWS_AS(config_from_map(parse_config_text("dr = 1e-5\n")),
                  ConfigError);
  CHECK_THROWS_AS(config_from_map(parse_config_text("[grid]\nnp = 64\n")),
                  ConfigError);  // case matters: the field is Np
  CHECK_THROWS_AS(config_from_map(parse_config_text("[gird]\nNp = 64\n")),
                  ConfigError);
}

TEST_CASE("2D profile pulls grid and model dimensions along") {
  RunConfig cfg =
      config_from_map(parse_config_text("[profile]\nkind = td_two_hump\n"));
  CHECK(cfg.dim == 2);
  CHECK(cfg.model.n == 2);
  CHECK(cfg.profile.phase == PhaseKind::radial_log_cosh);
  CHECK(cfg.effective_t_max() == 1.5);
  CHECK(cfg.effective_record_every() == 10);
}

TEST_CASE("incompatible phase is rejected at validation") {
  RunConfig cfg = config_from_map(parse_config_text(
      "[profile]\nkind = two_hump\nphase = none\n"));
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("doubles print in shortest round-trip form") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-1.75e-5) == "-1.75e-05");
  const double third = 1.0 / 3.0;
  double back = 0.0;
  std::sscanf(format_double(third).c_str(), "%lf", &back);
  CHECK(back == third);
}

TEST_CASE("diagnostic series serialisation") {
  DiagRecord a;
  a.t = 0.0;
  a.mass_sq = 3.75;
  a.kinetic = 1.5;
  a.potential = 0.25;
  a.total = 1.25;
  a.variance = 0.5;
  a.humps = 2;
  DiagRecord b = a;
  b.t = 0.125;
  std::ostringstream os;
  write_diag_csv(os, {a, b});
  CHECK(os.str() ==
        "t,mass_sq,kinetic,potential,total,variance,humps\n"
        "0,3.75,1.5,0.25,1.25,0.5,2\n"
        "0.125,3.75,1.5,0.25,1.25,0.5,2\n");
}

TEST_CASE("sweep serialisation with and without predictions") {
  SweepResult sweep;
  sweep.axis = SweepAxis::lambda;
  SweepRow r1;
  r1.param = 1.0;
  r1.verdict.blew_up = true;
  r1.verdict.t_star = 0.5;
  r1.verdict.resolution_converged = true;
  r1.humps = 1;
  SweepRow r2;
  r2.param = 2.0;  // survived: empty t_star field
  r2.humps = 3;
  sweep.rows = {r1, r2};
  std::ostringstream os;
  write_sweep_csv(os, sweep);
  CHECK(os.str() ==
        "param,t_star,blew_up,humps,converged\n"
        "1,0.5,1,1,1\n"
        "2,,0,3,0\n");

  sweep.has_prediction = true;
  sweep.rows[0].predicted_t_star = 0.25;
  sweep.rows[1].predicted_global = true;
  std::ostringstream os2;
  write_sweep_csv(os2, sweep);
  CHECK(os2.str() ==
        "param,t_star,blew_up,humps,converged,predicted_t_star\n"
        "1,0.5,1,1,1,0.25\n"
        "2,,0,3,0,\n");
}

TEST_CASE("report text carries the trend summary") {
  SweepResult sweep;
  sweep.axis = SweepAxis::delta;
  for (double d : {0.5, 1.0, 1.5, 2.0}) {
    SweepRow r;
    r.param = d;
    if (d < 1.8) {
      r.verdict.blew_up = true;
      r.verdict.t_star = 0.1 * d;  // increasing
      r.verdict.resolution_converged = true;
    }
    sweep.rows.push_back(r);
  }
  std::vector<std::pair<double, BlowupVerdict>> pts;
  for (const auto& r : sweep.rows) pts.emplace_back(r.param, r.verdict);
  sweep.report = monotonicity_report(pts);
  std::ostringstream os;
  write_report_txt(os, sweep);
  const std::string text = os.str();
  CHECK(text.find("axis: delta") != std::string::npos);
  CHECK(text.find("trend: increasing") != std::string::npos);
  CHECK(text.find("violations: 0") != std::string::npos);
  CHECK(text.find("no_blowup_boundary: 1.75") != std::string::npos);
}

}  // TEST_SUITE
