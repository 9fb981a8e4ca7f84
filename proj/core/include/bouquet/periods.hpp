#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bouquet/homology_matrix.hpp"
#include "bouquet/numeric.hpp"
#include "bouquet/spectral.hpp"
#include "bouquet/words.hpp"

namespace bouquet {

/// Exact #Fix(f^m) and #Per_m(f) for m = 1..horizon.
struct FixCountTable {
  std::uint64_t horizon = 0;
  std::vector<BigInt> fix;  ///< fix[m - 1] = #Fix(f^m)
  std::vector<BigInt> per;  ///< per[m - 1] = #Per_m(f)

  const BigInt& fix_count(std::uint64_t m) const { return fix.at(m - 1); }
  const BigInt& per_count(std::uint64_t m) const { return per.at(m - 1); }
};

/// Number of fixed points of f^m read off the word action:
///   |1 - sum_j chi_j(f^m(a_j))|        if the branch point is not fixed by f^m,
///   1 + |sum_j gamma_j(f^m(a_j))|      if it is and f^m preserves orientation,
///   1 + |sum_j chi_j(f^m(a_j))|        if it is and f^m reverses orientation.
BigInt fix_count(const MapAction& f, std::uint64_t m);

/// Fix counts for 1..horizon and their Moebius inversion into exact period
/// counts. Throws ConsistencyError naming m if a period count is negative.
FixCountTable per_census(const MapAction& f, std::uint64_t horizon);

/// |l(f^m)| when it equals #Per_m(f): always for orientation preserving f,
/// and for reversing f when m is odd or divisible by 4. std::nullopt when
/// m = 2 (mod 4) for reversing f. Requires a free branch point.
std::optional<BigInt> lefschetz_per_count(const MapAction& f, std::uint64_t m);

struct FixCheck {
  enum class Kind { Equality, Bound };

  bool passed = false;
  Kind kind = Kind::Equality;
  BigInt lefschetz;  ///< L(f^m)
  BigInt fix;        ///< #Fix(f^m)
  /// How L(f^m) entered the check, e.g. "L = -#Fix (f^m preserving)".
  std::string convention;
};

/// Compares L(f^m) with #Fix(f^m). When the branch point is not fixed by
/// f^m: L = -#Fix if f^m preserves orientation, L = #Fix if it reverses.
/// When it is fixed: L' <= #Fix <= 2n - 1 + L', where L' = L for reversing
/// f^m and |L| for preserving f^m.
FixCheck lefschetz_fix_check(const MapAction& f, std::uint64_t m);

enum class Rule {
  DoublingA,  ///< |d_jj| >= 2 for some j > 1
  DoublingB,  ///< d_11 >= 2
  DoublingC,  ///< d_11 < -2
  DoublingD,  ///< branch fixed and d_11 = -2
  DoublingE,  ///< d_11 = -2
  LowgrowA,   ///< 1 < i != j: |d_ij|, |d_ji| >= 1 and |d_ii| + |d_jj| >= 1
  LowgrowB,   ///< d_i1 not in {0, -1} for some i > 1
  LowgrowC,   ///< d_i1 = -1 for some i > 1
  LowgrowD,   ///< as LowgrowA over all indices, branch fixed
  FixGrowth,  ///< #Fix(f^m) exceeds the fix counts at m/p, p prime
  Dominant,   ///< a simple dominant eigenvalue of modulus > 1
  Completion  ///< two certificates whose conclusions together cover N
};

std::string to_string(Rule rule);

enum class ConclusionKind {
  AllPeriods,    ///< Per contains scale * N
  AllButOne,     ///< Per contains scale * (N \ {1})
  AllButTwo,     ///< Per contains scale * (N \ {2})
  AdjacentPair,  ///< for every l >= 1: l*scale or (l+1)*scale is in Per
  Tail,          ///< Per contains [value, infinity)
  PeriodPresent  ///< value is in Per
};

struct Conclusion {
  ConclusionKind kind = ConclusionKind::AllPeriods;
  std::uint64_t scale = 1;
  std::uint64_t value = 0;

  /// True if the conclusion alone guarantees that p is a period.
  bool certifies(std::uint64_t p) const;
  std::string to_string() const;
  bool operator==(const Conclusion&) const = default;
};

struct PeriodCertificate;

/// The data a rule fired on, enough to re-evaluate its hypothesis.
struct Witness {
  std::uint64_t power = 1;  ///< iterate whose matrix was tested (1 = f itself)
  std::size_t i = 0;        ///< 1-based row index, 0 if unused
  std::size_t j = 0;        ///< 1-based column index, 0 if unused
  std::vector<BigInt> values;
  std::string detail;
  std::vector<PeriodCertificate> premises;  ///< for Completion only
};

struct PeriodCertificate {
  Rule rule = Rule::DoublingA;
  Conclusion conclusion;
  Witness witness;

  std::string to_string() const;
};

/// First of the self-covering cases (a)..(e) that holds for abelianize(f).
std::optional<PeriodCertificate> criteria_doubling(const MapAction& f);

/// First of cases (a)..(c) (free branch point) or (d) (fixed branch point).
std::optional<PeriodCertificate> criteria_lowgrow(const MapAction& f);

/// When case (a) does not fire for a free branch point, the first pair (i, j)
/// involving index 1 that satisfies the broader case (d) inequalities.
std::optional<std::pair<std::size_t, std::size_t>> broader_lowgrow_pair(const MapAction& f);

/// Scans m = 2..max_m and evaluates the self-covering and low-growth tests on
/// abelianize(f)^m, with "branch fixed" read as "branch of least period m".
/// The first hit yields a conclusion over multiples of m.
std::optional<PeriodCertificate> criteria_delaylowgrow(const MapAction& f, std::uint64_t max_m);

/// #Fix(f^m) > sum over primes p | m of #Fix(f^{m/p}) certifies Per_m nonempty.
std::optional<PeriodCertificate> fix_growth_test(const FixCountTable& table, std::uint64_t m);

struct DominantPeriods {
  std::optional<PeriodCertificate> certificate;  ///< Tail from the analytic bound
  std::optional<std::uint64_t> analytic_m0;
  /// Least m such that fix_growth_test fires for all m' in [m, horizon].
  std::optional<std::uint64_t> empirical_m0;
};

/// std::nullopt when the spectrum is not dominant.
std::optional<DominantPeriods> dominant_periods(const MapAction& f, const SpectrumReport& spectrum,
                                                const FixCountTable& table);

/// False if some p <= horizon that the conclusion guarantees has per_count 0,
/// or (AdjacentPair) some pair l*scale, (l+1)*scale has both counts 0.
bool consistent_with_census(const PeriodCertificate& certificate, const FixCountTable& table);

/// Re-evaluates the hypothesis recorded in the witness against f.
bool recheck(const PeriodCertificate& certificate, const MapAction& f);

struct CertifyOptions {
  std::uint64_t delay_max_m = 6;
};

/// Every certificate the engine can issue for f, followed by completions.
/// The iterate scan is skipped when f itself already yields Per contains N.
/// Certificates from iterates that the census contradicts are returned but
/// never used as premises of a completion.
std::vector<PeriodCertificate> certify(const MapAction& f, const FixCountTable& table,
                                       const SpectrumReport& spectrum,
                                       const CertifyOptions& options = {});

}  // namespace bouquet
