#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlsb/harness.hpp"

namespace nlsb {

struct CatalogEntry {
  std::string name;
  std::string description;
};

std::vector<CatalogEntry> catalog_entries();
bool catalog_has(const std::string& name);

// Resolution / budget knobs applied on top of an entry's defaults.
struct CatalogOverrides {
  std::optional<int> np;
  std::optional<double> dt;
  std::optional<double> t_max;
  std::optional<int> record_every;
  std::optional<int> max_levels;
  std::optional<bool> refine;
  int workers = 1;
};

struct CatalogResult {
  std::string name;
  RunConfig base;  // base config of the sweep (first segment for chirp runs)
  SweepResult sweep;
};

// Executes a named catalog experiment. Chirp experiments first integrate the
// unchirped reference to get its blow-up time, then sweep a over
// multiplier * T_ref; the defocusing branch (a < 0) runs on a wider box.
CatalogResult run_catalog(const std::string& name,
                          const CatalogOverrides& ov = {});

}  // namespace nlsb
