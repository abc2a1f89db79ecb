#include "nlsb/csv.hpp"

#include <cstdio>
#include <fstream>

#include "nlsb/errors.hpp"

namespace nlsb {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back = 0.0;
  // Prefer the shorter %.15g / %.16g form when it round-trips exactly.
  for (int prec = 15; prec <= 16; ++prec) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
    std::sscanf(shorter, "%lf", &back);
    if (back == v) return shorter;
  }
  return buf;
}

void write_diag_csv(std::ostream& out, const std::vector<DiagRecord>& series) {
  out << "t,mass_sq,kinetic,potential,total,variance,humps\n";
  for (const auto& r : series) {
    out << format_double(r.t) << ',' << format_double(r.mass_sq) << ','
        << format_double(r.kinetic) << ',' << format_double(r.potential)
        << ',' << format_double(r.total) << ',' << format_double(r.variance)
        << ',' << r.humps << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "param,t_star,blew_up,humps,converged";
  if (sweep.has_prediction) out << ",predicted_t_star";
  out << '\n';
  for (const auto& row : sweep.rows) {
    out << format_double(row.param) << ',';
    if (row.verdict.t_star) out << format_double(*row.verdict.t_star);
    out << ',' << (row.verdict.blew_up ? 1 : 0) << ',' << row.humps << ','
        << (row.verdict.resolution_converged ? 1 : 0);
    if (sweep.has_prediction) {
      out << ',';
      if (row.predicted_t_star) out << format_double(*row.predicted_t_star);
    }
    out << '\n';
  }
}

void write_report_txt(std::ostream& out, const SweepResult& sweep) {
  const MonotonicityReport& rep = sweep.report;
  out << "axis: " << to_string(sweep.axis) << '\n';
  out << "points: " << sweep.rows.size() << '\n';
  out << "blowup_points: " << rep.blowup_points << '\n';
  if (sweep.reference_t_star)
    out << "reference_t_star: " << format_double(*sweep.reference_t_star)
        << '\n';
  if (!rep.valid) {
    out << "trend: not assessed (" << rep.note << ")\n";
    return;
  }
  out << "trend: " << (rep.direction > 0 ? "increasing" : "decreasing")
      << '\n';
  out << "monotone_prefix_pairs: " << rep.monotone_prefix_pairs << '\n';
  out << "monotone_suffix_pairs: " << rep.monotone_suffix_pairs << '\n';
  out << "violations: " << rep.violations.size() << '\n';
  for (const auto& v : rep.violations) {
    out << "  between " << format_double(v.param_lo) << " (t*="
        << format_double(v.t_lo) << ") and " << format_double(v.param_hi)
        << " (t*=" << format_double(v.t_hi) << ")\n";
  }
  out << "verdict_transitions: " << rep.verdict_transitions.size() << '\n';
  for (const auto& tr : rep.verdict_transitions) {
    out << "  between " << format_double(tr.first) << " and "
        << format_double(tr.second) << '\n';
  }
  if (rep.no_blowup_boundary)
    out << "no_blowup_boundary: " << format_double(*rep.no_blowup_boundary)
        << '\n';
  if (!rep.note.empty()) out << "note: " << rep.note << '\n';
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << contents;
  if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

}  // namespace nlsb
