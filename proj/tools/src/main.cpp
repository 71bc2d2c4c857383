#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "engel/error.hpp"

namespace fs = std::filesystem;
using namespace engel::verify;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_report(const CheckReport& r, const RunConfig& cfg) {
  const fs::path dir(cfg.out);
  if (cfg.format != "csv") write_file(dir / (r.check + ".json"), r.to_json().dump(2) + "\n");
  if (cfg.format != "json")
    for (const auto& t : r.tables) write_file(dir / (r.check + "_" + t.name + ".csv"), to_csv(t));
}

void print_summary(const CheckReport& r) {
  std::printf("%-17s %s\n", r.check.c_str(), to_string(r.status()).c_str());
  for (const auto& e : r.entries)
    if (e.status != Status::Pass) std::printf("  %s: %s\n", to_string(e.status).c_str(), e.name.c_str());
  std::fflush(stdout);
}

std::vector<CheckReport> run_all(const std::vector<std::string>& names, const RunConfig& cfg) {
  std::vector<CheckReport> reports;
  for (std::size_t start = 0; start < names.size(); start += static_cast<std::size_t>(cfg.jobs)) {
    std::vector<std::future<CheckReport>> batch;
    const std::size_t stop = std::min(names.size(), start + static_cast<std::size_t>(cfg.jobs));
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(cfg.jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&cfg, name = names[i]] { return run_check(name, cfg); }));
    for (auto& f : batch) {
      reports.push_back(f.get());
      print_summary(reports.back());
    }
  }
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of harmonic analysis on the Engel group"};
  app.set_config("--config", "", "key=value file with the same keys as the flags");
  app.allow_config_extras(false);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--grid-n", cfg.grid_n, "grid points")->capture_default_str();
  app.add_option("--grid-l", cfg.grid_l, "grid half-width")->capture_default_str();
  app.add_option("--lambda-min", cfg.truncation.lambda_min, "inner edge of the lambda core")->capture_default_str();
  app.add_option("--lambda-max", cfg.truncation.lambda_max, "outer edge of the lambda core")->capture_default_str();
  app.add_option("--mu-max", cfg.truncation.mu_max, "mu core half-width")->capture_default_str();
  app.add_option("--panels", cfg.truncation.panels, "initial lambda panels per side")->capture_default_str();
  app.add_option("--mu-step", cfg.mu_step, "finite-difference step in mu")->capture_default_str();
  app.add_option("--lambda-step", cfg.lambda_step, "finite-difference step in lambda")->capture_default_str();
  app.add_option("--x-step", cfg.x_step, "finite-difference step in x")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random samples for exact and representation checks")
      ->capture_default_str();
  for (auto& [name, value] : cfg.tolerances)
    app.add_option("--tol-" + name, value, "tolerance for " + name)->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--out", cfg.out, "report directory")->capture_default_str();
  app.add_option("--format", cfg.format, "json, csv or both")
      ->check(CLI::IsMember({"json", "csv", "both"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "checks run concurrently by all")->capture_default_str();

  std::vector<std::string> selected;
  for (const auto& name : check_names())
    app.add_subcommand(name, "run " + name)->callback([&selected, name] { selected = {name}; });
  app.add_subcommand("all", "run every check")->callback([&selected] { selected = check_names(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<CheckReport> reports;
  try {
    fs::create_directories(cfg.out);
    reports = run_all(selected, cfg);
    for (const auto& r : reports) write_report(r, cfg);
    if (selected.size() > 1 && cfg.format != "csv") {
      Json summary;
      Json checks = Json::array();
      Status overall = Status::Pass;
      for (const auto& r : reports) {
        checks.push_back({{"check", r.check}, {"status", to_string(r.status())}});
        overall = worst(overall, r.status());
      }
      summary["status"] = to_string(overall);
      summary["checks"] = checks;
      write_file(fs::path(cfg.out) / "summary.json", summary.dump(2) + "\n");
    }
  } catch (const engel::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  for (const auto& r : reports)
    if (r.status() == Status::Fail) return kExitFail;
  return 0;
}
