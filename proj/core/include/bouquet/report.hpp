#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bouquet/homology.hpp"
#include "bouquet/homology_matrix.hpp"
#include "bouquet/periods.hpp"
#include "bouquet/spec_document.hpp"
#include "bouquet/spectral.hpp"

namespace bouquet {

struct ReportOptions {
  std::optional<std::uint64_t> horizon;  ///< overrides the document's horizon
  std::uint64_t oracle_depth = 6;
  bool oracle = true;
  std::uint64_t entropy_horizon = 30;
  std::uint64_t delay_max_m = 6;
};

enum class OracleStatus { Match, Mismatch, Skipped };
std::string to_string(OracleStatus status);

struct OracleVerdict {
  std::uint64_t m = 0;
  OracleStatus status = OracleStatus::Skipped;
  BigInt expected;
  std::optional<std::uint64_t> observed;
  std::string reason;  ///< why the comparison was skipped
};

struct OracleSummary {
  bool enabled = false;
  std::string construction;  ///< "branch-free" or "branch-fixed"
  std::string base;          ///< base height as p/q
  bool branch_orbit_mismatch = false;
  std::string note;
  std::vector<OracleVerdict> fixed_points;  ///< count_fixed vs fix_count
  std::vector<OracleVerdict> cover_growth;  ///< cover_growth vs norm1(M^m)
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateEntry {
  PeriodCertificate certificate;
  bool rechecked = false;
  bool census_consistent = false;
};

struct EntropySummary {
  double spectral = 0.0;
  bool clamped = false;
  std::uint64_t horizon = 0;
  std::vector<double> limit;  ///< (1/m) log norm1(M^m), m = 1..horizon
  double gap = 0.0;           ///< |limit.back() - spectral|
};

struct AnalysisReport {
  MapSpecDocument input;
  ReportOptions options;
  std::uint64_t horizon = 0;
  Orientation orientation = Orientation::Preserving;
  HomologyMatrix matrix;
  Polynomial characteristic;
  LefschetzTable lefschetz;
  FixCountTable census;
  std::vector<std::uint64_t> period_set;  ///< m <= horizon with per_count(m) > 0
  SpectrumReport spectrum;
  bool dominant = false;
  EntropySummary entropy;
  std::vector<CertificateEntry> certificates;
  std::optional<DominantPeriods> dominant_periods;
  OracleSummary oracle;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  bool all_checks_passed() const;
};

/// Runs every analysis on the document. Module errors propagate unchanged;
/// cross-check failures are recorded in `checks` instead of thrown.
AnalysisReport run_report(const MapSpecDocument& doc, const ReportOptions& options = {});

/// Deterministic machine-readable form, versioned by a "schema" field.
std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

}  // namespace bouquet
