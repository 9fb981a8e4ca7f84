#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bouquet/homology_matrix.hpp"
#include "bouquet/numeric.hpp"

namespace bouquet {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

/// A generator a_j (positive) or its inverse (negative). Generators are
/// numbered from 1.
struct Letter {
  std::size_t generator = 1;
  Sign sign = Sign::Positive;

  Letter inverse() const noexcept { return {generator, flip(sign)}; }
  bool operator==(const Letter&) const = default;

  /// `a3` or `a3'`.
  std::string to_string() const;
};

/// Nonempty word whose letters all share one sign. Such words admit no free
/// cancellation, so counts on them are additive.
class Word {
 public:
  /// Throws InputError if `letters` is empty, mixes signs or uses generator 0.
  explicit Word(std::vector<Letter> letters);

  /// Parses whitespace-separated (or adjacent) `a<j>` / `a<j>'` tokens.
  static Word from_string(std::string_view text);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Sign sign() const noexcept { return letters_.front().sign; }
  const Letter& front() const noexcept { return letters_.front(); }
  const Letter& back() const noexcept { return letters_.back(); }

  /// Reversal with every sign flipped.
  Word inverse() const;

  /// Concatenation; both words must carry the same sign.
  Word operator+(const Word& rhs) const;
  bool operator==(const Word&) const = default;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Least period k of the branching point, or "free" when it is never periodic.
class BranchClass {
 public:
  static BranchClass free() noexcept { return BranchClass{}; }
  static BranchClass period(std::uint64_t k);

  bool is_free() const noexcept { return !period_.has_value(); }
  std::optional<std::uint64_t> period() const noexcept { return period_; }

  /// True iff the branching point is fixed by the m-th iterate.
  bool fixes_branch_at(std::uint64_t m) const noexcept {
    return period_ && m % *period_ == 0;
  }

  bool operator==(const BranchClass&) const = default;
  std::string to_string() const;

 private:
  std::optional<std::uint64_t> period_;
};

enum class Orientation { Preserving, Reversing };

std::string to_string(Orientation orientation);

/// Self-map of the bouquet of n circles given by the image words A_1..A_n of
/// the generators plus the orbit class of the branching point.
class MapAction {
 public:
  /// Validates: n >= 1, one image per generator, indices within 1..n, and a
  /// single sign shared by every image word.
  MapAction(std::size_t n, std::vector<Word> images, BranchClass branch);

  std::size_t n() const noexcept { return n_; }
  std::span<const Word> images() const noexcept { return images_; }
  /// Image of generator j, 1-based.
  const Word& image(std::size_t j) const;
  const BranchClass& branch() const noexcept { return branch_; }
  Sign sign() const noexcept { return images_.front().sign(); }

  MapAction with_branch(BranchClass branch) const;

  bool operator==(const MapAction&) const = default;

 private:
  std::size_t n_;
  std::vector<Word> images_;
  BranchClass branch_;
};

inline constexpr std::uint64_t kDefaultWordBudget = 1'000'000;

/// Signed number of occurrences of a_j (all letters share one sign).
long chi(const Word& w, std::size_t j);

/// As chi, restricted to the positions strictly between the first and last.
long gamma(const Word& w, std::size_t j);

/// Image of w under the endomorphism defined by f.
Word apply_endo(const MapAction& f, const Word& w);

/// Action whose images are the m-th iterates f^m(a_j). Throws BudgetError
/// naming the smallest power whose total letter count exceeds `letter_budget`.
MapAction iterate_action(const MapAction& f, std::uint64_t m,
                         std::uint64_t letter_budget = kDefaultWordBudget);

/// chi_j(f^m(a_j)) from the m-th power of the abelianization; no expansion.
BigInt chi_of_iterate(const MapAction& f, std::uint64_t m, std::size_t j);

/// gamma_j(f^m(a_j)) from the abelianization and the first/last letters of
/// the iterate, which follow a letter-level recursion.
BigInt gamma_of_iterate(const MapAction& f, std::uint64_t m, std::size_t j);

/// Same, reusing an already computed power `power == abelianize(f)^m`.
BigInt gamma_of_iterate(const MapAction& f, const HomologyMatrix& power,
                        std::uint64_t m, std::size_t j);

Letter first_letter_of_iterate(const MapAction& f, std::uint64_t m,
                               std::size_t j);
Letter last_letter_of_iterate(const MapAction& f, std::uint64_t m,
                              std::size_t j);

Orientation orientation(const MapAction& f);
Orientation orientation_of_iterate(const MapAction& f, std::uint64_t m);

}  // namespace bouquet
