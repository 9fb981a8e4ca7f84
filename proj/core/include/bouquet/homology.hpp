#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bouquet/homology_matrix.hpp"
#include "bouquet/numeric.hpp"
#include "bouquet/words.hpp"

namespace bouquet {

/// Entry (i, j) = chi_{i+1}(A_{j+1}).
HomologyMatrix abelianize(const MapAction& f);

/// Moebius function; m >= 1.
int mobius(std::uint64_t m);

/// Positive divisors of m in increasing order (trial division up to sqrt m).
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// Distinct prime factors of m in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// L(f^m) = 1 - Tr(M^m): H_0 of the connected bouquet contributes 1 and
/// there is no homology above degree one.
BigInt lefschetz(const HomologyMatrix& matrix, std::uint64_t m);

/// l(f^m) = sum over r | m of mu(r) L(f^{m/r}).
BigInt periodic_lefschetz(const HomologyMatrix& matrix, std::uint64_t m);

struct LefschetzRow {
  std::uint64_t m = 0;
  BigInt trace;     ///< Tr(M^m)
  BigInt L;         ///< L(f^m)
  BigInt l;         ///< l(f^m)
};

/// Traces, Lefschetz and periodic Lefschetz numbers for m = 1..horizon.
struct LefschetzTable {
  std::uint64_t horizon = 0;
  std::vector<LefschetzRow> rows;  ///< rows[m - 1]

  const LefschetzRow& at(std::uint64_t m) const { return rows.at(m - 1); }
};

LefschetzTable lefschetz_table(const HomologyMatrix& matrix, std::uint64_t horizon);

struct MifResult {
  bool holds = true;
  std::optional<std::uint64_t> failing_m;  ///< first m where the identity fails
};

/// Checks sum over r | m of l(f^r) == L(f^m) for every m <= horizon.
MifResult mif_check(const HomologyMatrix& matrix, std::uint64_t horizon);

}  // namespace bouquet
