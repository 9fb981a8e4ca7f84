#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bouquet/homology_matrix.hpp"
#include "bouquet/numeric.hpp"

namespace bouquet {

/// Integer polynomial with coefficients in increasing degree order.
struct Polynomial {
  std::vector<BigInt> coefficients;

  std::size_t degree() const noexcept {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
  std::complex<long double> evaluate(std::complex<long double> x) const;
  /// Sum of |c_k| |x|^k, the natural scale for a residual at x.
  long double magnitude_at(long double abs_x) const;
  /// e.g. "x^3 - 2x^2".
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;
};

/// Monic characteristic polynomial det(xI - M) via the trace recurrence
/// M_k = M M_{k-1} + c_{n-k+1} I, c_{n-k} = -Tr(M M_k) / k over exact integers.
Polynomial char_poly(const HomologyMatrix& matrix);

struct SpectrumReport {
  /// Sorted by nonincreasing modulus; equal moduli (within 1e-9) by
  /// descending real part, then descending imaginary part.
  std::vector<std::complex<double>> eigenvalues;
  double spectral_radius = 0.0;
  /// Natural log of the spectral radius, clamped at 0.
  double entropy = 0.0;
  /// Set when sigma < 1 forced the clamp.
  bool entropy_clamped = false;
  /// Largest |p(lambda)| / max(1, sum |c_k||lambda|^k) over all eigenvalues.
  double residual = 0.0;
};

struct EigenOptions {
  std::size_t max_dimension = 16;
  int max_iterations = 200;
  double tolerance = 1e-10;
};

/// All roots of char_poly with multiplicity. Repeated factors are split off
/// exactly (square-free decomposition over Q) before the all-roots iteration
/// runs on each square-free factor.
SpectrumReport eigenvalues(const HomologyMatrix& matrix, const EigenOptions& options = {});

/// log sigma(M), or 0 when sigma <= 1.
double entropy_spectral(const HomologyMatrix& matrix);

/// s_m = (1/m) log ||M^m|| for m = 1..horizon; exact norms, one log per term.
std::vector<double> entropy_limit(const HomologyMatrix& matrix, std::uint64_t horizon);

inline constexpr double kDominanceGap = 1e-8;

/// |lambda_1| > 1 + eps and |lambda_1| > |lambda_2| + eps.
bool dominant_test(const SpectrumReport& spectrum, double gap = kDominanceGap);

/// Smallest m with
///   |l1|^m > d [ m (|l1|^{m/2} + 1) + |l2|^m ] + 1,
/// scanning up to `cap`. Throws PreconditionError on a non-dominant spectrum.
std::optional<std::uint64_t> m0_bound(const SpectrumReport& spectrum, std::size_t d,
                                      std::uint64_t cap = 10'000);

}  // namespace bouquet
