#include "checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace engel::verify {

CheckReport run_check(const std::string& name, const RunConfig& cfg) {
  static const std::map<std::string, std::function<CheckReport(const RunConfig&)>> table{
      {"verify-group", check_group},     {"verify-fields", check_fields}, {"rep-check", check_representation},
      {"gft-check", check_gft},          {"plancherel", check_plancherel}, {"diffops", check_diffops},
      {"delta-table", check_delta_table}, {"seminorm", check_seminorm},   {"quantize-check", check_quantize},
      {"heisenberg-check", check_heisenberg}};
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown check: " + name);
  return it->second(cfg);
}

std::mt19937_64 check_rng(const RunConfig& cfg, const std::string& check) {
  const auto& names = check_names();
  const auto index = static_cast<std::uint64_t>(std::find(names.begin(), names.end(), check) - names.begin());
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

std::vector<TestFunction4> gaussian_test_functions() {
  Matrix4d a;
  a << 1.2, 0.3, 0.0, 0.1,  //
      0.3, 1.0, 0.2, 0.0,   //
      0.0, 0.2, 0.9, 0.1,   //
      0.1, 0.0, 0.1, 1.1;
  Vector4cd b;
  b << Complex(0.2, 0.1), Complex(-0.1, 0.0), Complex(0.0, 0.3), Complex(0.0, 0.0);
  return {TestFunction4::gaussian({1.0, 1.0, 1.0, 1.0}),
          TestFunction4::gaussian({1.5, 0.8, 1.2, 2.0}, {0.3, -0.2, 0.1, 0.4}, {0.5, 0.0, -0.3, 0.2}),
          TestFunction4::general(a, b)};
}

Json point_json(const Point& x) { return Json::array({x.x1, x.x2, x.x3, x.x4}); }

Entry& exact_entry(CheckReport& report, std::string name, std::string reference, long failures, long samples) {
  Entry e;
  e.name = std::move(name);
  e.reference = std::move(reference);
  e.tolerance = 0.0;
  e.values["samples"] = samples;
  e.values["failures"] = failures;
  e.status = failures == 0 ? Status::Pass : Status::Fail;
  return report.add(std::move(e));
}

}  // namespace engel::verify
