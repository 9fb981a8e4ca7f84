#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bouquet/report.hpp"
#include "bouquet/spec_document.hpp"

using namespace bouquet;

namespace {

MapSpecDocument load(const std::string& stem) {
  std::ifstream in(std::string(BOUQUET_FIXTURES_DIR) + "/" + stem + ".map");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

bool has_warning(const AnalysisReport& r, const std::string& needle) {
  return std::any_of(r.warnings.begin(), r.warnings.end(),
                     [&](const std::string& w) { return w.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Report, ReversingDoubling) {
  const AnalysisReport r = run_report(load("reversing_doubling"));
  EXPECT_TRUE(r.all_checks_passed());
  EXPECT_EQ(r.lefschetz.at(1).L, 3);
  EXPECT_EQ(r.lefschetz.at(2).l, -6);
  EXPECT_EQ(r.census.per_count(2), 0);
  EXPECT_NEAR(r.entropy.spectral, std::log(2.0), 1e-12);
  ASSERT_FALSE(r.certificates.empty());
  EXPECT_EQ(r.certificates.front().certificate.rule, Rule::DoublingE);
  EXPECT_EQ(r.orientation, Orientation::Reversing);
}

TEST(Report, Sixcycle) {
  const AnalysisReport r = run_report(load("sixcycle"));
  EXPECT_TRUE(r.all_checks_passed());
  EXPECT_EQ(r.period_set, std::vector<std::uint64_t>{3});
  EXPECT_EQ(r.entropy.spectral, 0.0);
  EXPECT_TRUE(has_warning(r, "l(f^3)"));
}

TEST(Report, M0Three) {
  const AnalysisReport r = run_report(load("m0_three"));
  EXPECT_TRUE(r.all_checks_passed());
  ASSERT_TRUE(r.dominant_periods);
  EXPECT_EQ(r.dominant_periods->empirical_m0, 3u);
  EXPECT_EQ(r.census.per_count(2), 0);
  EXPECT_TRUE(has_warning(r, "m0=10"));
}

TEST(Report, AllFixturesPassChecksAndOracle) {
  for (const char* stem : {"reversing_doubling", "lowgrow", "sixcycle", "delaylowgrow", "m0_three",
                           "doubling", "tripling_fixed_branch", "reversing_tripling_fixed_branch"}) {
    const AnalysisReport r = run_report(load(stem));
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << stem << ": " << c.name << " " << c.detail;
    for (const auto& v : r.oracle.fixed_points) EXPECT_NE(v.status, OracleStatus::Mismatch) << stem;
    for (const auto& v : r.oracle.cover_growth) EXPECT_NE(v.status, OracleStatus::Mismatch) << stem;
  }
}

TEST(Report, BranchOrbitMismatchIsReported) {
  const AnalysisReport r = run_report(load("branch_period_two"));
  EXPECT_TRUE(r.oracle.branch_orbit_mismatch);
  EXPECT_TRUE(has_warning(r, "branch"));
}

TEST(Report, OracleCanBeDisabled) {
  ReportOptions options;
  options.oracle = false;
  const AnalysisReport r = run_report(load("lowgrow"), options);
  EXPECT_FALSE(r.oracle.enabled);
  for (const auto& v : r.oracle.fixed_points) EXPECT_EQ(v.status, OracleStatus::Skipped);
}

TEST(Report, HorizonOverride) {
  ReportOptions options;
  options.horizon = 5;
  const AnalysisReport r = run_report(load("lowgrow"), options);
  EXPECT_EQ(r.horizon, 5u);
  EXPECT_EQ(r.census.horizon, 5u);
}

TEST(Report, JsonIsDeterministicAndParseable) {
  const MapSpecDocument doc = load("delaylowgrow");
  const std::string a = to_json(run_report(doc));
  const std::string b = to_json(run_report(doc));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_TRUE(j["lefschetz"].is_array());
  EXPECT_TRUE(j["entropy"].contains("spectral_log2"));
}

TEST(Report, TextMentionsCertificates) {
  const std::string text = to_text(run_report(load("lowgrow")));
  EXPECT_NE(text.find("completion"), std::string::npos);
  EXPECT_NE(text.find("in base 2"), std::string::npos);
}
