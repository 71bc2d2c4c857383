#pragma once

#include <random>
#include <string>
#include <vector>

#include "config.hpp"
#include "engel/test_function.hpp"
#include "report.hpp"

namespace engel::verify {

// Runs the named check; throws std::invalid_argument for unknown names.
CheckReport run_check(const std::string& name, const RunConfig& cfg);

CheckReport check_group(const RunConfig& cfg);
CheckReport check_fields(const RunConfig& cfg);
CheckReport check_representation(const RunConfig& cfg);
CheckReport check_gft(const RunConfig& cfg);
CheckReport check_plancherel(const RunConfig& cfg);
CheckReport check_diffops(const RunConfig& cfg);
CheckReport check_delta_table(const RunConfig& cfg);
CheckReport check_seminorm(const RunConfig& cfg);
CheckReport check_quantize(const RunConfig& cfg);
CheckReport check_heisenberg(const RunConfig& cfg);

// Generator seeded from the run seed and the check name, so checks draw
// independent streams whatever order they run in.
std::mt19937_64 check_rng(const RunConfig& cfg, const std::string& check);

// Three distinct Gaussian test functions: isotropic, shifted and modulated,
// and one with a correlated covariance.
std::vector<TestFunction4> gaussian_test_functions();

Json point_json(const Point& x);

// Pass iff failures == 0.
Entry& exact_entry(CheckReport& report, std::string name, std::string reference, long failures, long samples);

}  // namespace engel::verify
