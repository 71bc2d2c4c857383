#include "config.hpp"

#include <stdexcept>

namespace engel::verify {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"verify-group", "verify-fields", "rep-check", "gft-check",
                                              "plancherel",   "diffops",       "delta-table", "seminorm",
                                              "quantize-check", "heisenberg-check"};
  return names;
}

std::map<std::string, double> RunConfig::default_tolerances() {
  return {{"verify-group", 0.0},   {"verify-fields", 0.0}, {"rep-check", 1e-10}, {"gft-check", 1e-6},
          {"plancherel", 1e-2},    {"diffops", 1e-6},      {"delta-table", 1e-3}, {"seminorm", 1e-6},
          {"quantize-check", 1e-3}, {"heisenberg-check", 1e-10}};
}

void RunConfig::validate() const {
  if (grid_n < 16 || grid_n % 2 != 0) throw std::invalid_argument("grid-n must be even and at least 16");
  if (!(grid_l > 0.0)) throw std::invalid_argument("grid-l must be positive");
  truncation.validate();
  if (!(mu_step > 0.0) || !(lambda_step > 0.0) || !(x_step > 0.0))
    throw std::invalid_argument("finite-difference steps must be positive");
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  for (const auto& [name, value] : tolerances) {
    // exact checks carry tolerance 0
    const bool exact = name == "verify-group" || name == "verify-fields";
    if (exact ? value < 0.0 : !(value > 0.0)) throw std::invalid_argument("tol-" + name + " must be positive");
  }
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  if (format != "json" && format != "csv" && format != "both")
    throw std::invalid_argument("format must be json, csv or both");
}

}  // namespace engel::verify
