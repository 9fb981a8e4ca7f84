#include "bouquet/numeric.hpp"

#include <cmath>

namespace bouquet {

double log_abs(const BigInt& value) {
  if (sgn(value) == 0) return -INFINITY;
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) +
         static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace bouquet
