#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bouquet/numeric.hpp"

namespace bouquet {

/// Square matrix of exact integers representing the action on first homology.
/// Indices are zero-based: entry (i, j) is the signed number of times the
/// image of circle j+1 runs over circle i+1.
class HomologyMatrix {
 public:
  HomologyMatrix() = default;
  explicit HomologyMatrix(std::size_t n);
  HomologyMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static HomologyMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  HomologyMatrix operator*(const HomologyMatrix& rhs) const;
  bool operator==(const HomologyMatrix& rhs) const;

  /// Multi-line text rendering, one bracketed row per line.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

/// Exact power by repeated squaring; `m == 0` yields the identity.
HomologyMatrix mat_pow(const HomologyMatrix& matrix, std::uint64_t m);

BigInt trace(const HomologyMatrix& matrix);

/// Sum of absolute values of all entries.
BigInt norm1(const HomologyMatrix& matrix);

/// Sum of absolute values in column `j` (the letter count of an image word).
BigInt column_norm1(const HomologyMatrix& matrix, std::size_t j);

}  // namespace bouquet
