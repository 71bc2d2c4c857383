#include <gtest/gtest.h>

#include <cmath>

#include "checks.hpp"

using namespace engel::verify;

TEST(Report, JsonKeepsKeyOrder) {
  CheckReport r{"demo", "demonstration", {}, {}};
  r.bound("small", "bound", 1e-9, 1e-6);
  Entry e;
  e.name = "flagged";
  e.reference = "comparison";
  e.status = Status::Flag;
  e.note = "differs";
  r.add(e);
  r.tables.push_back({"rows", {"a"}, {{"1"}}});
  const Json j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "reference", "status", "entries", "tables"}));
  EXPECT_EQ(j["status"], "flag");
  EXPECT_EQ(j["entries"][0]["status"], "pass");
  EXPECT_EQ(j["entries"][1]["note"], "differs");
  EXPECT_EQ(j["tables"][0], "demo_rows.csv");
  EXPECT_EQ(r.status(), Status::Flag);
  r.bound("large", "bound", 1.0, 1e-6);
  EXPECT_EQ(r.status(), Status::Fail);
  EXPECT_EQ(r.bound("nan", "bound", NAN, 1.0).status, Status::Fail);
}

TEST(Report, CsvQuotingAndNumbers) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(to_csv({"t", {"x", "y"}, {{"1", "a\nb"}}}), "x,y\r\n1,\"a\nb\"\r\n");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(number(INFINITY), "inf");
}

TEST(Config, Validation) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.grid_n = 15;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.format = "xml";
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Checks, NamesAndDispatch) {
  const auto& names = check_names();
  EXPECT_EQ(names.size(), 10u);
  EXPECT_EQ(names.front(), "verify-group");
  RunConfig cfg;
  cfg.samples = 20;
  const CheckReport r = run_check("verify-group", cfg);
  EXPECT_EQ(r.status(), Status::Pass);
  EXPECT_FALSE(r.entries.empty());
  EXPECT_THROW(run_check("no-such-check", cfg), std::invalid_argument);
}

TEST(Checks, SeededStreamsAreIndependentOfOrder) {
  RunConfig cfg;
  auto a = check_rng(cfg, "rep-check");
  auto b = check_rng(cfg, "rep-check");
  auto c = check_rng(cfg, "verify-group");
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
}
