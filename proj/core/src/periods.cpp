#include "bouquet/periods.hpp"

#include <algorithm>
#include <sstream>

#include "bouquet/error.hpp"
#include "bouquet/homology.hpp"

namespace bouquet {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt fix_count_from_power(const MapAction& f, const HomologyMatrix& power, std::uint64_t m) {
  if (f.branch().fixes_branch_at(m)) {
    // A reversing iterate crosses the diagonal once for every a_j' in the
    // image of a_j, end letters included.
    if (orientation_of_iterate(f, m) == Orientation::Reversing)
      return 1 + abs_big(trace(power));
    BigInt sum = 0;
    for (std::size_t j = 1; j <= f.n(); ++j) sum += gamma_of_iterate(f, power, m, j);
    return 1 + abs_big(sum);
  }
  return abs_big(BigInt(1 - trace(power)));
}

// Branch context of the iterate f^power: "free" when b is never periodic,
// "fixed" when b has least period exactly `power`.
struct BranchContext {
  bool free = false;
  bool fixed = false;
};

BranchContext context_for(const MapAction& f, std::uint64_t power) {
  const auto k = f.branch().period();
  return {!k.has_value(), k.has_value() && *k == power};
}

bool is_matrix_rule(Rule rule) {
  return rule != Rule::FixGrowth && rule != Rule::Dominant && rule != Rule::Completion;
}

bool mutual_cover(const HomologyMatrix& d, std::size_t i, std::size_t j) {
  if (i == j) return false;
  return abs_big(d(i, j)) >= 1 && abs_big(d(j, i)) >= 1 &&
         abs_big(d(i, i)) + abs_big(d(j, j)) >= 1;
}

// Hypothesis of a matrix rule at 0-based indices (i, j); unused indices are 0.
bool rule_holds(Rule rule, const HomologyMatrix& d, std::size_t i, std::size_t j,
                BranchContext ctx) {
  const std::size_t n = d.size();
  if (i >= n || j >= n) return false;
  const BigInt& d11 = d(0, 0);
  switch (rule) {
    case Rule::DoublingA: return j > 0 && abs_big(d(j, j)) >= 2;
    case Rule::DoublingB: return d11 >= 2;
    case Rule::DoublingC: return d11 < -2;
    case Rule::DoublingD: return ctx.fixed && d11 == -2;
    case Rule::DoublingE: return d11 == -2;
    case Rule::LowgrowA: return ctx.free && i > 0 && j > 0 && mutual_cover(d, i, j);
    case Rule::LowgrowB: return ctx.free && i > 0 && d(i, 0) != 0 && d(i, 0) != -1;
    case Rule::LowgrowC: return ctx.free && i > 0 && d(i, 0) == -1;
    case Rule::LowgrowD: return ctx.fixed && mutual_cover(d, i, j);
    default: return false;
  }
}

ConclusionKind conclusion_of(Rule rule) {
  switch (rule) {
    case Rule::DoublingE: return ConclusionKind::AllButTwo;
    case Rule::LowgrowB: return ConclusionKind::AllButOne;
    case Rule::LowgrowC: return ConclusionKind::AdjacentPair;
    default: return ConclusionKind::AllPeriods;
  }
}

std::vector<BigInt> witness_values(Rule rule, const HomologyMatrix& d, std::size_t i,
                                   std::size_t j) {
  switch (rule) {
    case Rule::DoublingA: return {d(j, j)};
    case Rule::DoublingB:
    case Rule::DoublingC:
    case Rule::DoublingD:
    case Rule::DoublingE: return {d(0, 0)};
    case Rule::LowgrowB:
    case Rule::LowgrowC: return {d(i, 0)};
    default: return {d(i, j), d(j, i), d(i, i), d(j, j)};
  }
}

PeriodCertificate make_matrix_certificate(Rule rule, const HomologyMatrix& d, std::size_t i,
                                          std::size_t j, std::uint64_t power) {
  PeriodCertificate cert;
  cert.rule = rule;
  cert.conclusion = {conclusion_of(rule), power, 0};
  cert.witness.power = power;
  cert.witness.values = witness_values(rule, d, i, j);
  switch (rule) {
    case Rule::DoublingA:
      cert.witness.i = cert.witness.j = j + 1;
      break;
    case Rule::DoublingB:
    case Rule::DoublingC:
    case Rule::DoublingD:
    case Rule::DoublingE:
      cert.witness.i = cert.witness.j = 1;
      break;
    case Rule::LowgrowB:
    case Rule::LowgrowC:
      cert.witness.i = i + 1;
      cert.witness.j = 1;
      break;
    default:
      cert.witness.i = i + 1;
      cert.witness.j = j + 1;
  }
  std::ostringstream detail;
  if (power > 1) detail << "tested on f^" << power << "; ";
  detail << to_string(rule) << " at (" << cert.witness.i << "," << cert.witness.j << ")";
  cert.witness.detail = detail.str();
  return cert;
}

std::optional<PeriodCertificate> first_doubling(const HomologyMatrix& d, BranchContext ctx,
                                                std::uint64_t power) {
  for (std::size_t j = 1; j < d.size(); ++j)
    if (rule_holds(Rule::DoublingA, d, j, j, ctx))
      return make_matrix_certificate(Rule::DoublingA, d, j, j, power);
  for (Rule rule : {Rule::DoublingB, Rule::DoublingC, Rule::DoublingD, Rule::DoublingE})
    if (rule_holds(rule, d, 0, 0, ctx)) return make_matrix_certificate(rule, d, 0, 0, power);
  return std::nullopt;
}

std::optional<PeriodCertificate> first_lowgrow(const HomologyMatrix& d, BranchContext ctx,
                                               std::uint64_t power) {
  const std::size_t n = d.size();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rule_holds(Rule::LowgrowA, d, i, j, ctx))
        return make_matrix_certificate(Rule::LowgrowA, d, i, j, power);
  for (Rule rule : {Rule::LowgrowB, Rule::LowgrowC})
    for (std::size_t i = 1; i < n; ++i)
      if (rule_holds(rule, d, i, 0, ctx)) return make_matrix_certificate(rule, d, i, 0, power);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rule_holds(Rule::LowgrowD, d, i, j, ctx))
        return make_matrix_certificate(Rule::LowgrowD, d, i, j, power);
  return std::nullopt;
}

BigInt fix_at(const FixCountTable& table, std::uint64_t m) { return table.fix_count(m); }

}  // namespace

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::DoublingA: return "doubling(a)";
    case Rule::DoublingB: return "doubling(b)";
    case Rule::DoublingC: return "doubling(c)";
    case Rule::DoublingD: return "doubling(d)";
    case Rule::DoublingE: return "doubling(e)";
    case Rule::LowgrowA: return "lowgrow(a)";
    case Rule::LowgrowB: return "lowgrow(b)";
    case Rule::LowgrowC: return "lowgrow(c)";
    case Rule::LowgrowD: return "lowgrow(d)";
    case Rule::FixGrowth: return "fix-growth";
    case Rule::Dominant: return "dominant";
    case Rule::Completion: return "completion";
  }
  return "unknown";
}

bool Conclusion::certifies(std::uint64_t p) const {
  if (p == 0) return false;
  switch (kind) {
    case ConclusionKind::AllPeriods: return p % scale == 0;
    case ConclusionKind::AllButOne: return p % scale == 0 && p != scale;
    case ConclusionKind::AllButTwo: return p % scale == 0 && p != 2 * scale;
    case ConclusionKind::AdjacentPair: return false;
    case ConclusionKind::Tail: return p >= value;
    case ConclusionKind::PeriodPresent: return p == value;
  }
  return false;
}

std::string Conclusion::to_string() const {
  const std::string base = scale == 1 ? "N" : std::to_string(scale) + "N";
  switch (kind) {
    case ConclusionKind::AllPeriods: return "Per contains " + base;
    case ConclusionKind::AllButOne:
      return "Per contains " + base + " \\ {" + std::to_string(scale) + "}";
    case ConclusionKind::AllButTwo:
      return "Per contains " + base + " \\ {" + std::to_string(2 * scale) + "}";
    case ConclusionKind::AdjacentPair:
      return scale == 1 ? "for every l: l or l+1 in Per"
                        : "for every l: " + std::to_string(scale) + "l or " +
                              std::to_string(scale) + "(l+1) in Per";
    case ConclusionKind::Tail: return "Per contains [" + std::to_string(value) + ", inf)";
    case ConclusionKind::PeriodPresent: return std::to_string(value) + " in Per";
  }
  return "";
}

std::string PeriodCertificate::to_string() const {
  return bouquet::to_string(rule) + ": " + conclusion.to_string() + " [" + witness.detail + "]";
}

BigInt fix_count(const MapAction& f, std::uint64_t m) {
  if (m == 0) throw InputError("periods::fix_count", "m must be at least 1");
  return fix_count_from_power(f, mat_pow(abelianize(f), m), m);
}

FixCountTable per_census(const MapAction& f, std::uint64_t horizon) {
  if (horizon == 0) throw InputError("periods::per_census", "horizon must be at least 1");
  FixCountTable table;
  table.horizon = horizon;
  const HomologyMatrix d = abelianize(f);
  HomologyMatrix power = d;
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    if (m > 1) power = power * d;
    table.fix.push_back(fix_count_from_power(f, power, m));
  }
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    BigInt per = 0;
    for (std::uint64_t r : divisors(m)) per += mobius(m / r) * table.fix_count(r);
    if (per < 0)
      throw ConsistencyError("periods::per_census",
                             "negative period count " + to_string(per) + " at m=" +
                                 std::to_string(m));
    table.per.push_back(per);
  }
  return table;
}

std::optional<BigInt> lefschetz_per_count(const MapAction& f, std::uint64_t m) {
  if (!f.branch().is_free())
    throw PreconditionError("periods::lefschetz_per_count",
                            "requires a branch point that is never periodic");
  if (orientation(f) == Orientation::Reversing && m % 4 == 2) return std::nullopt;
  return abs_big(periodic_lefschetz(abelianize(f), m));
}

FixCheck lefschetz_fix_check(const MapAction& f, std::uint64_t m) {
  FixCheck check;
  check.lefschetz = lefschetz(abelianize(f), m);
  check.fix = fix_count(f, m);
  const bool preserving = orientation_of_iterate(f, m) == Orientation::Preserving;
  if (!f.branch().fixes_branch_at(m)) {
    check.kind = FixCheck::Kind::Equality;
    if (preserving) {
      check.convention = "L = -#Fix (f^m preserving)";
      check.passed = check.lefschetz == -check.fix;
    } else {
      check.convention = "L = #Fix (f^m reversing)";
      check.passed = check.lefschetz == check.fix;
    }
    return check;
  }
  check.kind = FixCheck::Kind::Bound;
  BigInt effective = check.lefschetz;
  if (preserving) {
    effective = abs_big(check.lefschetz);
    check.convention = "|L| <= #Fix <= 2n-1+|L| (f^m preserving, branch fixed)";
  } else {
    check.convention = "L <= #Fix <= 2n-1+L (f^m reversing, branch fixed)";
  }
  const BigInt upper = BigInt(2 * static_cast<long>(f.n()) - 1) + effective;
  check.passed = effective <= check.fix && check.fix <= upper;
  return check;
}

std::optional<PeriodCertificate> criteria_doubling(const MapAction& f) {
  return first_doubling(abelianize(f), context_for(f, 1), 1);
}

std::optional<PeriodCertificate> criteria_lowgrow(const MapAction& f) {
  return first_lowgrow(abelianize(f), context_for(f, 1), 1);
}

std::optional<std::pair<std::size_t, std::size_t>> broader_lowgrow_pair(const MapAction& f) {
  if (!f.branch().is_free()) return std::nullopt;
  const HomologyMatrix d = abelianize(f);
  for (std::size_t i = 1; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (mutual_cover(d, i, j)) return std::nullopt;
  for (std::size_t j = 1; j < d.size(); ++j)
    if (mutual_cover(d, 0, j)) return std::make_pair(std::size_t{1}, j + 1);
  return std::nullopt;
}

std::optional<PeriodCertificate> criteria_delaylowgrow(const MapAction& f, std::uint64_t max_m) {
  if (max_m < 2) throw InputError("periods::criteria_delaylowgrow", "max_m must be at least 2");
  const HomologyMatrix d = abelianize(f);
  HomologyMatrix power = d;
  for (std::uint64_t m = 2; m <= max_m; ++m) {
    power = power * d;
    const BranchContext ctx = context_for(f, m);
    if (auto cert = first_doubling(power, ctx, m)) return cert;
    if (auto cert = first_lowgrow(power, ctx, m)) return cert;
  }
  return std::nullopt;
}

std::optional<PeriodCertificate> fix_growth_test(const FixCountTable& table, std::uint64_t m) {
  if (m == 0 || m > table.horizon)
    throw InputError("periods::fix_growth_test", "m outside the table horizon");
  BigInt sum = 0;
  for (std::uint64_t p : prime_factors(m)) sum += fix_at(table, m / p);
  const BigInt& fix = fix_at(table, m);
  if (fix <= sum) return std::nullopt;
  PeriodCertificate cert;
  cert.rule = Rule::FixGrowth;
  cert.conclusion = {ConclusionKind::PeriodPresent, 1, m};
  cert.witness.power = m;
  cert.witness.values = {fix, sum};
  cert.witness.detail = "#Fix(f^" + std::to_string(m) + ")=" + to_string(fix) +
                        " > " + to_string(sum);
  return cert;
}

std::optional<DominantPeriods> dominant_periods(const MapAction& f, const SpectrumReport& spectrum,
                                                const FixCountTable& table) {
  if (!dominant_test(spectrum)) return std::nullopt;
  DominantPeriods result;
  result.analytic_m0 = m0_bound(spectrum, f.n());
  if (result.analytic_m0) {
    PeriodCertificate cert;
    cert.rule = Rule::Dominant;
    cert.conclusion = {ConclusionKind::Tail, 1, *result.analytic_m0};
    cert.witness.detail = "m0 bound " + std::to_string(*result.analytic_m0) +
                          " from |l1|=" + std::to_string(spectrum.spectral_radius);
    result.certificate = cert;
  }
  for (std::uint64_t m = table.horizon; m >= 1; --m) {
    if (!fix_growth_test(table, m)) break;
    result.empirical_m0 = m;
  }
  return result;
}

namespace {

std::vector<PeriodCertificate> completions(const std::vector<PeriodCertificate>& all,
                                           const FixCountTable& table) {
  std::vector<PeriodCertificate> certs;
  for (const auto& c : all)
    if (c.witness.power == 1 || c.rule == Rule::FixGrowth || consistent_with_census(c, table))
      certs.push_back(c);
  std::vector<PeriodCertificate> out;
  auto covered_by_others = [&](std::uint64_t p, std::size_t skip) -> const PeriodCertificate* {
    for (std::size_t c = 0; c < certs.size(); ++c)
      if (c != skip && certs[c].conclusion.certifies(p)) return &certs[c];
    return nullptr;
  };
  auto already = [&](std::uint64_t scale) {
    return std::any_of(certs.begin(), certs.end(),
                       [&](const PeriodCertificate& c) {
                         return c.conclusion.kind == ConclusionKind::AllPeriods &&
                                scale % c.conclusion.scale == 0;
                       }) ||
           std::any_of(out.begin(), out.end(), [&](const PeriodCertificate& c) {
             return scale % c.conclusion.scale == 0;
           });
  };
  for (std::size_t c = 0; c < certs.size(); ++c) {
    const Conclusion& con = certs[c].conclusion;
    std::vector<std::uint64_t> missing;
    if (con.kind == ConclusionKind::AllButOne) missing = {con.scale};
    else if (con.kind == ConclusionKind::AllButTwo) missing = {2 * con.scale};
    else if (con.kind == ConclusionKind::Tail)
      for (std::uint64_t p = 1; p < con.value; ++p) missing.push_back(p);
    else continue;
    const std::uint64_t scale = con.kind == ConclusionKind::Tail ? 1 : con.scale;
    if (already(scale)) continue;
    PeriodCertificate done;
    done.rule = Rule::Completion;
    done.conclusion = {ConclusionKind::AllPeriods, scale, 0};
    done.witness.premises.push_back(certs[c]);
    bool complete = true;
    for (std::uint64_t p : missing) {
      const PeriodCertificate* other = covered_by_others(p, c);
      if (!other) {
        complete = false;
        break;
      }
      done.witness.premises.push_back(*other);
    }
    if (!complete) continue;
    std::string detail = "combines";
    for (const auto& premise : done.witness.premises)
      detail += " {" + to_string(premise.rule) + ": " + premise.conclusion.to_string() + "}";
    done.witness.detail = detail;
    out.push_back(done);
  }
  return out;
}

}  // namespace

std::vector<PeriodCertificate> certify(const MapAction& f, const FixCountTable& table,
                                       const SpectrumReport& spectrum,
                                       const CertifyOptions& options) {
  std::vector<PeriodCertificate> certs;
  if (auto c = criteria_doubling(f)) certs.push_back(*c);
  if (auto c = criteria_lowgrow(f)) certs.push_back(*c);
  const bool covers_n = std::any_of(certs.begin(), certs.end(), [](const PeriodCertificate& c) {
    return c.conclusion.kind == ConclusionKind::AllPeriods && c.conclusion.scale == 1;
  });
  if (options.delay_max_m >= 2 && !covers_n)
    if (auto c = criteria_delaylowgrow(f, options.delay_max_m)) certs.push_back(*c);
  for (std::uint64_t m = 1; m <= table.horizon; ++m)
    if (auto c = fix_growth_test(table, m)) certs.push_back(*c);
  if (auto dom = dominant_periods(f, spectrum, table); dom && dom->certificate)
    certs.push_back(*dom->certificate);
  for (auto& c : completions(certs, table)) certs.push_back(std::move(c));
  return certs;
}

bool consistent_with_census(const PeriodCertificate& certificate, const FixCountTable& table) {
  const Conclusion& c = certificate.conclusion;
  if (c.kind == ConclusionKind::AdjacentPair) {
    for (std::uint64_t l = 1; (l + 1) * c.scale <= table.horizon; ++l)
      if (table.per_count(l * c.scale) == 0 && table.per_count((l + 1) * c.scale) == 0)
        return false;
    return true;
  }
  for (std::uint64_t p = 1; p <= table.horizon; ++p)
    if (c.certifies(p) && table.per_count(p) == 0) return false;
  return true;
}

bool recheck(const PeriodCertificate& certificate, const MapAction& f) {
  const Witness& w = certificate.witness;
  if (is_matrix_rule(certificate.rule)) {
    if (w.i == 0 || w.j == 0 || w.power == 0) return false;
    const HomologyMatrix d = mat_pow(abelianize(f), w.power);
    if (!rule_holds(certificate.rule, d, w.i - 1, w.j - 1, context_for(f, w.power)))
      return false;
    return witness_values(certificate.rule, d, w.i - 1, w.j - 1) == w.values &&
           certificate.conclusion ==
               Conclusion{conclusion_of(certificate.rule), w.power, 0};
  }
  switch (certificate.rule) {
    case Rule::FixGrowth: {
      const std::uint64_t m = certificate.conclusion.value;
      if (m == 0) return false;
      const auto again = fix_growth_test(per_census(f, m), m);
      return again && again->witness.values == w.values;
    }
    case Rule::Dominant: {
      const SpectrumReport spectrum = eigenvalues(abelianize(f));
      if (!dominant_test(spectrum)) return false;
      const auto m0 = m0_bound(spectrum, f.n());
      return m0 && *m0 == certificate.conclusion.value;
    }
    case Rule::Completion: {
      if (w.premises.empty()) return false;
      for (const auto& premise : w.premises)
        if (!recheck(premise, f)) return false;
      const Conclusion& head = w.premises.front().conclusion;
      std::vector<std::uint64_t> missing;
      if (head.kind == ConclusionKind::AllButOne) missing = {head.scale};
      else if (head.kind == ConclusionKind::AllButTwo) missing = {2 * head.scale};
      else if (head.kind == ConclusionKind::Tail)
        for (std::uint64_t p = 1; p < head.value; ++p) missing.push_back(p);
      else return false;
      for (std::uint64_t p : missing) {
        const bool covered =
            std::any_of(w.premises.begin() + 1, w.premises.end(),
                        [&](const PeriodCertificate& c) { return c.conclusion.certifies(p); });
        if (!covered) return false;
      }
      return true;
    }
    default: return false;
  }
}

}  // namespace bouquet
