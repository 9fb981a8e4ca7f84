#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bouquet/numeric.hpp"
#include "bouquet/words.hpp"

namespace bouquet {

/// y = slope * x + intercept on [lo, hi]; the image lies in one unit interval.
struct LinearPiece {
  Rational lo;
  Rational hi;
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
  bool operator==(const LinearPiece&) const = default;
};

enum class LiftConstruction {
  BranchFree,  ///< every circle starts and ends at the base height
  BranchFixed  ///< every letter traversed in full, so integers map to integers
};

/// Piecewise-linear self-map of [0, n] lifting a map of the bouquet, with all
/// integers identified to the branch point. Pieces are half-open [lo, hi)
/// except the last, which is closed at n.
class PLLift {
 public:
  PLLift(std::size_t n, Rational base, LiftConstruction construction,
         std::vector<LinearPiece> pieces);

  std::size_t n() const noexcept { return n_; }
  const Rational& base() const noexcept { return base_; }
  LiftConstruction construction() const noexcept { return construction_; }
  const std::vector<LinearPiece>& pieces() const noexcept { return pieces_; }

  /// Index of the piece owning x under the half-open convention.
  std::size_t piece_index(const Rational& x) const;
  Rational evaluate(const Rational& x) const;

  /// One line per piece: "x_lo x_hi slope intercept", each as p/q.
  std::string dump() const;

 private:
  std::size_t n_;
  Rational base_;
  LiftConstruction construction_;
  std::vector<LinearPiece> pieces_;
};

struct LiftOptions {
  Rational base{1, 2};
  /// Iterates checked for fixed points on slope +-1 pieces.
  std::uint64_t degeneracy_depth = 12;
  /// Defaults to BranchFixed when f declares k = 1 and BranchFree otherwise.
  std::optional<LiftConstruction> construction;
};

/// Builds the lift whose circle j traverses the circles in the order of the
/// image word of a_j. For the branch-free construction each image word must
/// start or end with a1 or a1' (words ending with it are rotated), and the
/// words must not give d_11 = -1 with d_j1 = 0 for all j > 1
/// (PreconditionError). Throws DegenerateMapError when some iterate up to
/// degeneracy_depth has a fixed point on a piece of slope +-1.
PLLift build_lift(const MapAction& f, const LiftOptions& options = {});

/// Tries a fixed list of base heights and returns the first lift that is
/// non-degenerate up to `depth` and whose branch orbit avoids the integers
/// for max(depth, 12) steps. Throws the last failure if none qualifies.
PLLift select_lift(const MapAction& f, std::uint64_t depth = 12);

inline constexpr std::size_t kDefaultPieceBudget = 10'000'000;

/// outer after inner, with exact breakpoint pullback.
PLLift compose(const PLLift& outer, const PLLift& inner,
               std::size_t piece_budget = kDefaultPieceBudget);

/// L^m. Throws BudgetError carrying the first power that exceeded the budget.
PLLift iterate_lift(const PLLift& lift, std::uint64_t m,
                    std::size_t piece_budget = kDefaultPieceBudget);

/// Fixed points of an already iterated lift: non-integer solutions of
/// L(x) = x, plus one for the branch point when L(0) is an integer.
/// Throws DegenerateMapError for a fixed point on a piece of slope +-1.
std::uint64_t count_fixed_points(const PLLift& iterated);
std::uint64_t count_fixed(const PLLift& lift, std::uint64_t m);

/// #{x in [0, n) : L(x) is an integer} for an already iterated lift.
std::uint64_t integer_preimages(const PLLift& iterated);
std::uint64_t mono_cover_size(const PLLift& lift);
std::uint64_t cover_growth(const PLLift& lift, std::uint64_t m);

/// L(0), L^2(0), ..., L^m(0).
std::vector<Rational> branch_orbit(const PLLift& lift, std::uint64_t m);

/// Least i <= m with L^i(0) an integer.
std::optional<std::uint64_t> branch_return(const PLLift& lift, std::uint64_t m);

}  // namespace bouquet
