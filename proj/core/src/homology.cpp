#include "bouquet/homology.hpp"

#include <algorithm>

#include "bouquet/error.hpp"

namespace bouquet {

HomologyMatrix abelianize(const MapAction& f) {
  HomologyMatrix d(f.n());
  for (std::size_t j = 0; j < f.n(); ++j)
    for (const Letter& l : f.images()[j].letters())
      d(l.generator - 1, j) += to_int(l.sign);
  return d;
}

int mobius(std::uint64_t m) {
  if (m == 0) throw InputError("homology::mobius", "argument must be >= 1");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  if (m == 0) throw InputError("homology::divisors", "argument must be >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    primes.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

BigInt lefschetz(const HomologyMatrix& matrix, std::uint64_t m) {
  if (m == 0) throw InputError("homology::lefschetz", "power must be >= 1");
  return 1 - trace(mat_pow(matrix, m));
}

BigInt periodic_lefschetz(const HomologyMatrix& matrix, std::uint64_t m) {
  BigInt sum = 0;
  for (std::uint64_t r : divisors(m)) {
    const int mu = mobius(r);
    if (mu != 0) sum += mu * lefschetz(matrix, m / r);
  }
  return sum;
}

LefschetzTable lefschetz_table(const HomologyMatrix& matrix, std::uint64_t horizon) {
  LefschetzTable table;
  table.horizon = horizon;
  table.rows.resize(horizon);
  HomologyMatrix power = HomologyMatrix::identity(matrix.size());
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    power = power * matrix;
    LefschetzRow& row = table.rows[m - 1];
    row.m = m;
    row.trace = trace(power);
    row.L = 1 - row.trace;
  }
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    BigInt l = 0;
    for (std::uint64_t r : divisors(m)) {
      const int mu = mobius(r);
      if (mu != 0) l += mu * table.rows[m / r - 1].L;
    }
    table.rows[m - 1].l = l;
  }
  return table;
}

MifResult mif_check(const HomologyMatrix& matrix, std::uint64_t horizon) {
  const LefschetzTable table = lefschetz_table(matrix, horizon);
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    BigInt sum = 0;
    for (std::uint64_t r : divisors(m)) sum += table.at(r).l;
    if (sum != table.at(m).L) return {false, m};
  }
  return {};
}

}  // namespace bouquet
