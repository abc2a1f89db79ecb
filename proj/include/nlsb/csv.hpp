#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nlsb/diagnostics.hpp"
#include "nlsb/harness.hpp"

namespace nlsb {

// Shortest round-trip decimal form, locale independent ('.' decimal point).
std::string format_double(double v);

void write_diag_csv(std::ostream& out, const std::vector<DiagRecord>& series);
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
void write_report_txt(std::ostream& out, const SweepResult& sweep);

void write_file(const std::string& path, const std::string& contents);

}  // namespace nlsb
