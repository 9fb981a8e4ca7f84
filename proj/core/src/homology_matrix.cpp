#include "bouquet/homology_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace bouquet {

HomologyMatrix::HomologyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

HomologyMatrix::HomologyMatrix(
    std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), entries_() {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix must be square");
    for (long value : row) entries_.emplace_back(value);
  }
}

HomologyMatrix HomologyMatrix::identity(std::size_t n) {
  HomologyMatrix result(n);
  for (std::size_t i = 0; i < n; ++i) result(i, i) = 1;
  return result;
}

HomologyMatrix HomologyMatrix::operator*(const HomologyMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  HomologyMatrix result(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) result(i, j) += a * rhs(k, j);
    }
  }
  return result;
}

bool HomologyMatrix::operator==(const HomologyMatrix& rhs) const {
  return n_ == rhs.n_ && entries_ == rhs.entries_;
}

std::string HomologyMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).get_str();
    }
    out << "]\n";
  }
  return out.str();
}

HomologyMatrix mat_pow(const HomologyMatrix& matrix, std::uint64_t m) {
  HomologyMatrix result = HomologyMatrix::identity(matrix.size());
  HomologyMatrix base = matrix;
  while (m > 0) {
    if (m & 1U) result = result * base;
    m >>= 1U;
    if (m > 0) base = base * base;
  }
  return result;
}

BigInt trace(const HomologyMatrix& matrix) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) sum += matrix(i, i);
  return sum;
}

BigInt norm1(const HomologyMatrix& matrix) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix.size(); ++j) sum += abs(matrix(i, j));
  return sum;
}

BigInt column_norm1(const HomologyMatrix& matrix, std::size_t j) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) sum += abs(matrix(i, j));
  return sum;
}

}  // namespace bouquet
