#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "engel/plancherel.hpp"

namespace engel::verify {

// Names of the individual checks, in the order `all` runs them.
const std::vector<std::string>& check_names();

struct RunConfig {
  int grid_n = 256;
  double grid_l = 12.0;  // grid half-width
  QuadratureSpec truncation;
  double mu_step = 0.05;
  double lambda_step = 0.02;
  double x_step = 1e-3;
  int samples = 100;
  std::map<std::string, double> tolerances = default_tolerances();
  std::uint64_t seed = 7;
  std::string out = "reports";
  std::string format = "json";  // json, csv or both
  int jobs = 1;                 // checks run concurrently by `all`

  double tol(const std::string& check) const { return tolerances.at(check); }
  Grid1D grid() const { return Grid1D(grid_l, grid_n); }
  // Throws std::invalid_argument describing the first bad field.
  void validate() const;

  static std::map<std::string, double> default_tolerances();
};

}  // namespace engel::verify
