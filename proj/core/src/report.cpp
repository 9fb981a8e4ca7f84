#include "bouquet/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "bouquet/error.hpp"
#include "bouquet/pl_oracle.hpp"

namespace bouquet {

namespace {

using Json = nlohmann::ordered_json;
using Complex = std::complex<double>;

// Reference values for a few well-known matrices; a mismatch with the
// computed value becomes a warning, never an error.
struct ReferenceValues {
  std::optional<std::pair<std::uint64_t, long>> periodic_lefschetz;
  std::vector<Complex> eigenvalues;
  std::optional<std::uint64_t> m0;
};

HomologyMatrix cyclic_block_matrix(std::size_t replaced_row, std::size_t replaced_col,
                                   std::uint64_t corner) {
  HomologyMatrix m{{1, 1, 1, 1}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, static_cast<long>(corner)}};
  if (replaced_row > 0) m(replaced_row, replaced_col) = 2;
  return m;
}

std::optional<ReferenceValues> reference_values(const HomologyMatrix& matrix) {
  using std::numbers::pi;
  if (matrix.size() != 4) return std::nullopt;
  if (matrix == cyclic_block_matrix(0, 0, 0)) {
    return ReferenceValues{std::make_pair(std::uint64_t{3}, 2L),
                           {Complex(1, 0), Complex(-1, 0), std::polar(1.0, pi / 3),
                            std::polar(1.0, -pi / 3)},
                           std::nullopt};
  }
  const double r = std::cbrt(2.0);
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 1}, {3, 2}}) {
    if (matrix == cyclic_block_matrix(i, j, 0))
      return ReferenceValues{std::nullopt,
                             {Complex(1, 0), Complex(-r, 0), std::polar(r, pi / 3),
                              std::polar(r, -pi / 3)},
                             std::nullopt};
  }
  if (matrix == cyclic_block_matrix(0, 0, 1)) {
    return ReferenceValues{std::nullopt,
                           {Complex(1.47, 0), Complex(1, 0), Complex(0.23, 0.79),
                            Complex(0.23, -0.79)},
                           std::uint64_t{10}};
  }
  return std::nullopt;
}

bool same_multiset(std::vector<Complex> reference, const std::vector<Complex>& computed,
                   double tolerance) {
  if (reference.size() != computed.size()) return false;
  for (const Complex& z : computed) {
    auto it = std::find_if(reference.begin(), reference.end(),
                           [&](const Complex& w) { return std::abs(w - z) <= tolerance; });
    if (it == reference.end()) return false;
    reference.erase(it);
  }
  return true;
}

std::string format_real(double x) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_complex(const Complex& z) {
  if (std::abs(z.imag()) < 1e-12) return format_real(z.real());
  std::ostringstream out;
  out << format_real(z.real()) << (z.imag() < 0 ? " - " : " + ") << format_real(std::abs(z.imag()))
      << "i";
  return out.str();
}

std::string join_complex(const std::vector<Complex>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    char buf[96];
    if (std::abs(values[i].imag()) < 1e-12)
      std::snprintf(buf, sizeof buf, "%.4g", values[i].real());
    else
      std::snprintf(buf, sizeof buf, "%.4g%+.4gi", values[i].real(), values[i].imag());
    out += buf;
  }
  return out;
}

void add_reference_warnings(AnalysisReport& report) {
  const auto reference = reference_values(report.matrix);
  if (!reference) return;
  if (reference->periodic_lefschetz) {
    const auto [m, printed] = *reference->periodic_lefschetz;
    if (m <= report.horizon && report.lefschetz.at(m).l != printed)
      report.warnings.push_back("reference value l(f^" + std::to_string(m) +
                                ")=" + std::to_string(printed) +
                                " for this matrix differs from computed " +
                                to_string(report.lefschetz.at(m).l));
  }
  if (!reference->eigenvalues.empty() &&
      !same_multiset(reference->eigenvalues, report.spectrum.eigenvalues, 0.01))
    report.warnings.push_back("reference eigenvalues {" + join_complex(reference->eigenvalues) +
                              "} for this matrix differ from computed {" +
                              join_complex(report.spectrum.eigenvalues) + "}");
  if (reference->m0 && report.dominant_periods) {
    const auto& analytic = report.dominant_periods->analytic_m0;
    if (!analytic || *analytic != *reference->m0)
      report.warnings.push_back("reference value m0=" + std::to_string(*reference->m0) +
                                " for this matrix differs from computed " +
                                (analytic ? std::to_string(*analytic) : std::string("none")));
  }
}

void run_oracle(AnalysisReport& report, const MapAction& f) {
  OracleSummary& oracle = report.oracle;
  const std::uint64_t depth = report.options.oracle_depth;
  auto skip_all = [&](const std::string& reason) {
    for (std::uint64_t m = 1; m <= depth; ++m) {
      oracle.fixed_points.push_back({m, OracleStatus::Skipped, 0, std::nullopt, reason});
      oracle.cover_growth.push_back({m, OracleStatus::Skipped, 0, std::nullopt, reason});
    }
  };
  oracle.enabled = report.options.oracle;
  if (!oracle.enabled) {
    skip_all("oracle disabled");
    return;
  }
  MapAction target = f;
  const auto k = f.branch().period();
  if (k && *k >= 2) {
    oracle.branch_orbit_mismatch = true;
    target = f.with_branch(BranchClass::free());
    report.warnings.push_back(
        "branch-orbit mismatch: the lift realizes a never-periodic branch point, so the oracle "
        "validates only the free-branch fixed-point formula");
  }
  std::optional<PLLift> lift;
  try {
    lift = select_lift(target, std::max<std::uint64_t>(depth, 1));
  } catch (const Error& e) {
    report.warnings.push_back(std::string("oracle skipped: ") + e.what());
    skip_all(e.what());
    return;
  }
  oracle.construction =
      lift->construction() == LiftConstruction::BranchFree ? "branch-free" : "branch-fixed";
  oracle.base = to_fraction_string(lift->base());
  oracle.note = "slopes carry the global orientation sign of the map";

  const HomologyMatrix& d = report.matrix;
  HomologyMatrix power = d;
  PLLift current = *lift;
  std::string stop_reason;
  for (std::uint64_t m = 1; m <= depth; ++m) {
    if (m > 1) power = power * d;
    const BigInt expected_fix = oracle.branch_orbit_mismatch
                                    ? fix_count(target, m)
                                    : (m <= report.horizon ? report.census.fix_count(m)
                                                           : fix_count(f, m));
    const BigInt expected_cover = norm1(power);
    if (stop_reason.empty() && m > 1) {
      try {
        current = compose(*lift, current);
      } catch (const BudgetError&) {
        stop_reason = "piece budget exceeded at power " + std::to_string(m);
        report.warnings.push_back("oracle truncated: " + stop_reason);
      }
    }
    if (!stop_reason.empty()) {
      oracle.fixed_points.push_back({m, OracleStatus::Skipped, expected_fix, std::nullopt,
                                     stop_reason});
      oracle.cover_growth.push_back({m, OracleStatus::Skipped, expected_cover, std::nullopt,
                                     stop_reason});
      continue;
    }
    OracleVerdict fix{m, OracleStatus::Skipped, expected_fix, std::nullopt, ""};
    try {
      fix.observed = count_fixed_points(current);
      fix.status = BigInt(static_cast<unsigned long>(*fix.observed)) == expected_fix
                       ? OracleStatus::Match
                       : OracleStatus::Mismatch;
    } catch (const DegenerateMapError& e) {
      fix.reason = e.what();
    }
    oracle.fixed_points.push_back(fix);
    OracleVerdict cover{m, OracleStatus::Mismatch, expected_cover, integer_preimages(current), ""};
    if (BigInt(static_cast<unsigned long>(*cover.observed)) == expected_cover)
      cover.status = OracleStatus::Match;
    oracle.cover_growth.push_back(cover);
  }
  for (const auto& v : oracle.fixed_points)
    if (v.status != OracleStatus::Skipped)
      report.checks.push_back({"oracle-fix m=" + std::to_string(v.m),
                               v.status == OracleStatus::Match,
                               "lift " + std::to_string(*v.observed) + ", words " +
                                   to_string(v.expected)});
  for (const auto& v : oracle.cover_growth)
    if (v.status != OracleStatus::Skipped)
      report.checks.push_back({"oracle-cover m=" + std::to_string(v.m),
                               v.status == OracleStatus::Match,
                               "lift " + std::to_string(*v.observed) + ", norm " +
                                   to_string(v.expected)});
}

void run_checks(AnalysisReport& report, const MapAction& f) {
  const std::uint64_t H = report.horizon;
  const MifResult mif = mif_check(report.matrix, H);
  report.checks.push_back({"moebius-inversion", mif.holds,
                           mif.holds ? "holds up to " + std::to_string(H)
                                     : "fails at m=" + std::to_string(*mif.failing_m)});
  bool bound_used = false;
  for (std::uint64_t m = 1; m <= H; ++m) {
    const FixCheck check = lefschetz_fix_check(f, m);
    bound_used = bound_used || check.kind == FixCheck::Kind::Bound;
    report.checks.push_back({"lefschetz-fix m=" + std::to_string(m), check.passed,
                             "L=" + to_string(check.lefschetz) + ", #Fix=" +
                                 to_string(check.fix) + ", " + check.convention});
  }
  if (bound_used && orientation(f) == Orientation::Preserving)
    report.warnings.push_back(
        "fixed-branch bound L' <= #Fix <= 2n-1+L' is checked with L' = |L| for orientation "
        "preserving iterates");
  if (f.branch().is_free()) {
    for (std::uint64_t m = 1; m <= H; ++m) {
      const auto l = lefschetz_per_count(f, m);
      if (!l) continue;
      report.checks.push_back({"lefschetz-per m=" + std::to_string(m),
                               *l == report.census.per_count(m),
                               "|l|=" + to_string(*l) + ", per=" +
                                   to_string(report.census.per_count(m))});
    }
    if (report.orientation == Orientation::Reversing) {
      for (std::uint64_t p = 3; 2 * p <= H; p += 2) {
        if (prime_factors(p).size() != 1 || prime_factors(p).front() != p) continue;
        const BigInt lhs = report.lefschetz.at(2 * p).l;
        const BigInt rhs = -report.census.per_count(2 * p) - 2 * report.census.per_count(p);
        report.checks.push_back({"even-identity m=" + std::to_string(2 * p), lhs == rhs,
                                 "l=" + to_string(lhs) + ", -per(2p)-2per(p)=" + to_string(rhs)});
      }
    }
  }
  for (const auto& entry : report.certificates) {
    const std::string name = to_string(entry.certificate.rule);
    report.checks.push_back({"certificate-recheck " + name, entry.rechecked,
                             entry.certificate.conclusion.to_string()});
    if (entry.certificate.witness.power > 1 && entry.certificate.rule != Rule::FixGrowth) {
      // Transferring an iterate's hypotheses to multiples of m is not sound
      // in general; a contradiction here is a limitation of the rule.
      if (!entry.census_consistent)
        report.warnings.push_back(entry.certificate.to_string() +
                                  " is contradicted by the census; not used for completion");
      continue;
    }
    report.checks.push_back({"certificate-census " + name, entry.census_consistent,
                             entry.certificate.conclusion.to_string()});
  }
}

}  // namespace

std::string to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::Match: return "match";
    case OracleStatus::Mismatch: return "mismatch";
    case OracleStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool AnalysisReport::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

AnalysisReport run_report(const MapSpecDocument& doc, const ReportOptions& options) {
  AnalysisReport report;
  report.input = doc;
  report.options = options;
  report.horizon = options.horizon.value_or(doc.horizon);
  if (report.horizon == 0) throw InputError("cli::run_report", "horizon must be at least 1");
  if (options.entropy_horizon == 0)
    throw InputError("cli::run_report", "entropy horizon must be at least 1");
  const MapAction f = doc.action();
  report.orientation = orientation(f);
  report.matrix = abelianize(f);
  report.characteristic = char_poly(report.matrix);
  report.lefschetz = lefschetz_table(report.matrix, report.horizon);
  report.census = per_census(f, report.horizon);
  for (std::uint64_t m = 1; m <= report.horizon; ++m)
    if (report.census.per_count(m) > 0) report.period_set.push_back(m);

  report.spectrum = eigenvalues(report.matrix);
  report.dominant = dominant_test(report.spectrum);
  report.entropy.spectral = report.spectrum.entropy;
  report.entropy.clamped = report.spectrum.entropy_clamped;
  report.entropy.horizon = options.entropy_horizon;
  report.entropy.limit = entropy_limit(report.matrix, options.entropy_horizon);
  report.entropy.gap = std::abs(report.entropy.limit.back() - report.entropy.spectral);
  if (report.entropy.clamped)
    report.warnings.push_back("spectral radius " + format_real(report.spectrum.spectral_radius) +
                              " below 1; entropy clamped to 0");

  CertifyOptions certify_options;
  certify_options.delay_max_m = options.delay_max_m;
  for (auto& cert : certify(f, report.census, report.spectrum, certify_options)) {
    CertificateEntry entry{cert, recheck(cert, f), consistent_with_census(cert, report.census)};
    report.certificates.push_back(std::move(entry));
  }
  report.dominant_periods = dominant_periods(f, report.spectrum, report.census);
  if (const auto pair = broader_lowgrow_pair(f))
    report.warnings.push_back("indices (" + std::to_string(pair->first) + "," +
                              std::to_string(pair->second) +
                              ") satisfy the lowgrow(d) inequalities, which apply only when the "
                              "branch point is fixed; lowgrow(a) requires indices above 1");

  run_checks(report, f);
  run_oracle(report, f);
  add_reference_warnings(report);
  return report;
}

namespace {

Json real_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (x == 0) return 0.0;
  return std::stod(format_real(x));
}

Json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json certificate_json(const PeriodCertificate& cert) {
  static const char* kKinds[] = {"all",       "all-but-one",   "all-but-two",
                                 "adjacent-pair", "tail", "period-present"};
  Json j;
  j["rule"] = to_string(cert.rule);
  j["conclusion"] = cert.conclusion.to_string();
  j["kind"] = kKinds[static_cast<int>(cert.conclusion.kind)];
  j["scale"] = cert.conclusion.scale;
  j["value"] = cert.conclusion.value;
  Json w;
  w["power"] = cert.witness.power;
  w["i"] = cert.witness.i;
  w["j"] = cert.witness.j;
  w["values"] = Json::array();
  for (const auto& v : cert.witness.values) w["values"].push_back(to_string(v));
  w["detail"] = cert.witness.detail;
  if (!cert.witness.premises.empty()) {
    w["premises"] = Json::array();
    for (const auto& p : cert.witness.premises) w["premises"].push_back(certificate_json(p));
  }
  j["witness"] = w;
  return j;
}

Json verdicts_json(const std::vector<OracleVerdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) {
    Json j;
    j["m"] = v.m;
    j["status"] = to_string(v.status);
    j["expected"] = to_string(v.expected);
    j["observed"] = v.observed ? Json(std::to_string(*v.observed)) : Json(nullptr);
    if (!v.reason.empty()) j["reason"] = v.reason;
    out.push_back(j);
  }
  return out;
}

std::string branch_text(const BranchClass& b) {
  return b.is_free() ? "free" : "period " + std::to_string(*b.period());
}

}  // namespace

std::string to_json(const AnalysisReport& report) {
  Json j;
  j["schema"] = 1;
  Json input;
  input["n"] = report.input.n;
  input["branch"] = branch_text(report.input.branch);
  input["images"] = Json::array();
  for (const auto& w : report.input.images) input["images"].push_back(w.to_string());
  input["horizon"] = report.input.horizon;
  j["input"] = input;
  Json options;
  options["horizon"] = report.horizon;
  options["oracle"] = report.options.oracle;
  options["oracle_depth"] = report.options.oracle_depth;
  options["entropy_horizon"] = report.options.entropy_horizon;
  j["options"] = options;
  j["orientation"] = to_string(report.orientation);

  Json matrix = Json::array();
  for (std::size_t r = 0; r < report.matrix.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < report.matrix.size(); ++c)
      row.push_back(to_string(report.matrix(r, c)));
    matrix.push_back(row);
  }
  j["matrix"] = matrix;
  Json poly;
  poly["coefficients"] = Json::array();
  for (const auto& c : report.characteristic.coefficients)
    poly["coefficients"].push_back(to_string(c));
  poly["text"] = report.characteristic.to_string();
  j["char_poly"] = poly;

  j["lefschetz"] = Json::array();
  for (const auto& row : report.lefschetz.rows)
    j["lefschetz"].push_back(
        {{"m", row.m}, {"trace", to_string(row.trace)}, {"L", to_string(row.L)},
         {"l", to_string(row.l)}});
  j["census"] = Json::array();
  for (std::uint64_t m = 1; m <= report.census.horizon; ++m)
    j["census"].push_back({{"m", m},
                           {"fix", to_string(report.census.fix_count(m))},
                           {"per", to_string(report.census.per_count(m))}});
  j["period_set"] = report.period_set;

  Json spectrum;
  spectrum["eigenvalues"] = Json::array();
  for (const auto& z : report.spectrum.eigenvalues)
    spectrum["eigenvalues"].push_back(
        {{"re", real_json(z.real())}, {"im", real_json(z.imag())}, {"modulus", real_json(std::abs(z))}});
  spectrum["spectral_radius"] = real_json(report.spectrum.spectral_radius);
  spectrum["residual"] = real_json(report.spectrum.residual);
  spectrum["dominant"] = report.dominant;
  j["spectrum"] = spectrum;

  Json entropy;
  entropy["spectral"] = real_json(report.entropy.spectral);
  entropy["spectral_log2"] = real_json(report.entropy.spectral / std::log(2.0));
  entropy["clamped"] = report.entropy.clamped;
  entropy["limit_horizon"] = report.entropy.horizon;
  entropy["limit"] = Json::array();
  for (double s : report.entropy.limit) entropy["limit"].push_back(real_json(s));
  entropy["gap"] = real_json(report.entropy.gap);
  j["entropy"] = entropy;

  j["certificates"] = Json::array();
  for (const auto& entry : report.certificates) {
    Json c = certificate_json(entry.certificate);
    c["rechecked"] = entry.rechecked;
    c["census_consistent"] = entry.census_consistent;
    j["certificates"].push_back(c);
  }
  if (report.dominant_periods)
    j["dominant"] = {{"analytic_m0", optional_json(report.dominant_periods->analytic_m0)},
                     {"empirical_m0", optional_json(report.dominant_periods->empirical_m0)}};
  else
    j["dominant"] = nullptr;

  Json oracle;
  oracle["enabled"] = report.oracle.enabled;
  oracle["construction"] = report.oracle.construction;
  oracle["base"] = report.oracle.base;
  oracle["branch_orbit_mismatch"] = report.oracle.branch_orbit_mismatch;
  oracle["note"] = report.oracle.note;
  oracle["fixed_points"] = verdicts_json(report.oracle.fixed_points);
  oracle["cover_growth"] = verdicts_json(report.oracle.cover_growth);
  j["oracle"] = oracle;

  j["checks"] = Json::array();
  for (const auto& c : report.checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["warnings"] = report.warnings;
  j["status"] = report.all_checks_passed() ? "ok" : "mismatch";
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "map\n";
  std::istringstream spec(print_spec(report.input));
  for (std::string line; std::getline(spec, line);) out << "  " << line << '\n';
  out << "orientation: " << to_string(report.orientation) << "\n\n";

  out << "homology matrix\n" << report.matrix.to_string() << '\n';
  out << "characteristic polynomial: " << report.characteristic.to_string() << "\n\n";

  std::vector<std::vector<std::string>> table = {{"m", "trace", "L(f^m)", "l(f^m)", "#Fix", "#Per"}};
  for (std::uint64_t m = 1; m <= report.horizon; ++m) {
    const auto& row = report.lefschetz.at(m);
    table.push_back({std::to_string(m), to_string(row.trace), to_string(row.L), to_string(row.l),
                     to_string(report.census.fix_count(m)), to_string(report.census.per_count(m))});
  }
  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << std::string(widths[c] - row[c].size() + 2, ' ') << row[c];
    out << '\n';
  }
  out << "periods up to " << report.horizon << ":";
  for (auto p : report.period_set) out << ' ' << p;
  out << "\n\n";

  out << "eigenvalues:";
  for (const auto& z : report.spectrum.eigenvalues) out << "  " << format_complex(z);
  out << "\nspectral radius " << format_real(report.spectrum.spectral_radius) << ", residual "
      << format_real(report.spectrum.residual) << (report.dominant ? ", dominant" : "") << '\n';
  out << "entropy: log(radius) = " << format_real(report.entropy.spectral) << " ("
      << format_real(report.entropy.spectral / std::log(2.0)) << " in base 2)"
      << (report.entropy.clamped ? " (clamped)" : "") << ", norm growth at m="
      << report.entropy.horizon << " = " << format_real(report.entropy.limit.back())
      << ", gap " << format_real(report.entropy.gap) << "\n\n";

  out << "certificates\n";
  if (report.certificates.empty()) out << "  none\n";
  for (const auto& entry : report.certificates)
    out << "  " << entry.certificate.to_string() << '\n';
  if (report.dominant_periods) {
    const auto& d = *report.dominant_periods;
    out << "  dominant eigenvalue: analytic m0 "
        << (d.analytic_m0 ? std::to_string(*d.analytic_m0) : "none") << ", empirical m0 "
        << (d.empirical_m0 ? std::to_string(*d.empirical_m0) : "none") << '\n';
  }
  out << '\n';

  out << "oracle";
  if (!report.oracle.enabled) {
    out << ": disabled\n";
  } else {
    out << " (" << report.oracle.construction << ", base " << report.oracle.base << ")\n";
    for (std::size_t i = 0; i < report.oracle.fixed_points.size(); ++i) {
      const auto& fix = report.oracle.fixed_points[i];
      const auto& cover = report.oracle.cover_growth[i];
      out << "  m=" << fix.m << "  fixed points " << to_string(fix.status);
      if (fix.observed) out << " (" << *fix.observed << ")";
      out << "  cover " << to_string(cover.status);
      if (cover.observed) out << " (" << *cover.observed << ")";
      if (!fix.reason.empty()) out << "  " << fix.reason;
      out << '\n';
    }
  }
  out << '\n';

  std::size_t failed = 0;
  for (const auto& c : report.checks)
    if (!c.passed) {
      ++failed;
      out << "FAILED " << c.name << ": " << c.detail << '\n';
    }
  out << "checks: " << report.checks.size() - failed << " passed, " << failed << " failed\n";
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  return out.str();
}

}  // namespace bouquet
