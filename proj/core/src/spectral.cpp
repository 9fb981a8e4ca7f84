#include "bouquet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bouquet/error.hpp"

namespace bouquet {

using Complex = std::complex<long double>;

std::complex<long double> Polynomial::evaluate(Complex x) const {
  Complex acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

long double Polynomial::magnitude_at(long double abs_x) const {
  long double acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * abs_x + std::fabs(static_cast<long double>(it->get_d()));
  return acc;
}

std::string Polynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const BigInt& c = coefficients[k];
    if (sgn(c) == 0) continue;
    const BigInt magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || k == 0) out << magnitude.get_str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

Polynomial char_poly(const HomologyMatrix& matrix) {
  const std::size_t n = matrix.size();
  Polynomial p;
  p.coefficients.assign(n + 1, BigInt(0));
  p.coefficients[n] = 1;
  HomologyMatrix running(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    running = matrix * running;
    for (std::size_t i = 0; i < n; ++i) running(i, i) += p.coefficients[n - k + 1];
    const BigInt t = trace(matrix * running);
    BigInt c = -t;
    if (!mpz_divisible_ui_p(c.get_mpz_t(), k))
      throw ConsistencyError("spectral::char_poly", "inexact trace division");
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    p.coefficients[n - k] = c;
  }
  return p;
}

namespace {

using RPoly = std::vector<Rational>;  // increasing degree

void trim(RPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::size_t degree(const RPoly& p) { return p.empty() ? 0 : p.size() - 1; }

bool is_constant(const RPoly& p) { return p.size() <= 1; }

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(k));
  trim(d);
  return d;
}

void make_monic(RPoly& p) {
  trim(p);
  if (p.empty()) return;
  const Rational lead = p.back();
  for (Rational& c : p) c /= lead;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<RPoly, RPoly> divide(RPoly a, const RPoly& b) {
  trim(a);
  RPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RPoly subtract(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

RPoly gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

struct SquareFreeFactor {
  RPoly factor;
  std::size_t multiplicity;
};

// Yun's algorithm.
std::vector<SquareFreeFactor> square_free_decomposition(const RPoly& p) {
  std::vector<SquareFreeFactor> out;
  const RPoly dp = derivative(p);
  const RPoly b = gcd(p, dp);
  RPoly c = divide(p, b).first;
  RPoly d = subtract(divide(dp, b).first, derivative(c));
  for (std::size_t i = 1; !is_constant(c); ++i) {
    RPoly a = gcd(c, d);
    c = divide(c, a).first;
    d = subtract(divide(d, a).first, derivative(c));
    if (!is_constant(a)) out.push_back({std::move(a), i});
  }
  return out;
}

struct DoublePoly {
  std::vector<long double> c;  // increasing degree, monic

  Complex eval(Complex x) const {
    Complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Complex eval_derivative(Complex x) const {
    Complex acc = 0;
    for (std::size_t k = c.size() - 1; k >= 1; --k)
      acc = acc * x + static_cast<long double>(k) * c[k];
    return acc;
  }
};

std::vector<Complex> aberth_roots(const RPoly& factor, int max_iterations) {
  DoublePoly q;
  for (const Rational& r : factor) q.c.push_back(static_cast<long double>(r.get_d()));
  const std::size_t deg = degree(factor);
  if (deg == 1) return {Complex(-q.c[0], 0)};

  long double radius = 0;
  for (std::size_t k = 0; k < deg; ++k) radius = std::max(radius, std::fabs(q.c[k]));
  radius += 1;
  std::vector<Complex> z(deg);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (std::size_t k = 0; k < deg; ++k)
    z[k] = std::polar(radius, two_pi * static_cast<long double>(k) /
                                  static_cast<long double>(deg) + 0.4L);

  for (int it = 0; it < max_iterations; ++it) {
    bool converged = true;
    for (std::size_t k = 0; k < deg; ++k) {
      const Complex value = q.eval(z[k]);
      if (value == Complex(0)) continue;
      const Complex ratio = value / q.eval_derivative(z[k]);
      Complex repulsion = 0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != k) repulsion += Complex(1) / (z[k] - z[j]);
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) > 1e-17L * (1 + std::abs(z[k]))) converged = false;
    }
    if (converged) break;
  }
  // Newton polish on the square-free factor.
  for (Complex& root : z) {
    for (int it = 0; it < 3; ++it) {
      const Complex dv = q.eval_derivative(root);
      if (dv == Complex(0)) break;
      root -= q.eval(root) / dv;
    }
    if (std::fabs(root.imag()) <= 1e-15L * (1 + std::abs(root)))
      root = Complex(root.real(), 0);
  }
  return z;
}

long double scaled_residual(const Polynomial& p, Complex root) {
  const long double scale = std::max<long double>(1, p.magnitude_at(std::abs(root)));
  return std::abs(p.evaluate(root)) / scale;
}

}  // namespace

SpectrumReport eigenvalues(const HomologyMatrix& matrix, const EigenOptions& options) {
  constexpr const char* where = "spectral::eigenvalues";
  if (matrix.size() > options.max_dimension)
    throw PreconditionError(where, "dimension " + std::to_string(matrix.size()) +
                                       " exceeds the configured maximum " +
                                       std::to_string(options.max_dimension));
  SpectrumReport report;
  if (matrix.size() == 0) return report;

  const Polynomial p = char_poly(matrix);
  RPoly rational;
  for (const BigInt& c : p.coefficients) rational.emplace_back(c);

  std::vector<Complex> roots;
  for (const SquareFreeFactor& part : square_free_decomposition(rational)) {
    const std::vector<Complex> simple = aberth_roots(part.factor, options.max_iterations);
    for (std::size_t k = 0; k < part.multiplicity; ++k)
      roots.insert(roots.end(), simple.begin(), simple.end());
  }
  if (roots.size() != p.degree())
    throw ConsistencyError(where, "square-free decomposition lost roots");

  long double residual = 0;
  for (const Complex& root : roots) residual = std::max(residual, scaled_residual(p, root));
  report.residual = static_cast<double>(residual);
  if (!(report.residual <= options.tolerance))
    throw ConvergenceError(where,
                           "root iteration stopped with residual " +
                               std::to_string(report.residual),
                           report.residual);

  for (const Complex& root : roots)
    report.eigenvalues.emplace_back(static_cast<double>(root.real()),
                                    static_cast<double>(root.imag()));
  auto& ev = report.eigenvalues;
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    return std::abs(a) > std::abs(b);
  });
  // Tie-break runs of equal modulus deterministically.
  for (std::size_t start = 0; start < ev.size();) {
    std::size_t end = start + 1;
    while (end < ev.size() &&
           std::abs(ev[start]) - std::abs(ev[end]) <= 1e-9 * (1 + std::abs(ev[start])))
      ++end;
    std::sort(ev.begin() + static_cast<std::ptrdiff_t>(start),
              ev.begin() + static_cast<std::ptrdiff_t>(end),
              [](const auto& a, const auto& b) {
                if (a.real() != b.real()) return a.real() > b.real();
                return a.imag() > b.imag();
              });
    start = end;
  }

  report.spectral_radius = ev.empty() ? 0.0 : std::abs(ev.front());
  if (report.spectral_radius < 1 - 1e-9) {
    report.entropy = 0;
    report.entropy_clamped = true;
  } else {
    report.entropy = std::max(0.0, std::log(report.spectral_radius));
  }
  return report;
}

double entropy_spectral(const HomologyMatrix& matrix) { return eigenvalues(matrix).entropy; }

std::vector<double> entropy_limit(const HomologyMatrix& matrix, std::uint64_t horizon) {
  std::vector<double> out;
  out.reserve(horizon);
  HomologyMatrix power = HomologyMatrix::identity(matrix.size());
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    power = power * matrix;
    out.push_back(log_abs(norm1(power)) / static_cast<double>(m));
  }
  return out;
}

bool dominant_test(const SpectrumReport& spectrum, double gap) {
  if (spectrum.eigenvalues.empty()) return false;
  const double first = std::abs(spectrum.eigenvalues[0]);
  const double second =
      spectrum.eigenvalues.size() > 1 ? std::abs(spectrum.eigenvalues[1]) : 0.0;
  return first > 1 + gap && first > second + gap;
}

std::optional<std::uint64_t> m0_bound(const SpectrumReport& spectrum, std::size_t d,
                                      std::uint64_t cap) {
  if (!dominant_test(spectrum))
    throw PreconditionError("spectral::m0_bound",
                            "requires |l1| > 1 and |l1| > |l2|");
  const long double l1 = std::abs(spectrum.eigenvalues[0]);
  const long double l2 =
      spectrum.eigenvalues.size() > 1 ? std::abs(spectrum.eigenvalues[1]) : 0.0L;
  const long double dim = static_cast<long double>(d);
  // Both sides divided by l1^m to stay finite for large m.
  for (std::uint64_t m = 1; m <= cap; ++m) {
    const long double mm = static_cast<long double>(m);
    const long double rhs =
        dim * (mm * (std::pow(l1, -mm / 2) + std::pow(l1, -mm)) + std::pow(l2 / l1, mm)) +
        std::pow(l1, -mm);
    if (1 > rhs) return m;
  }
  return std::nullopt;
}

}  // namespace bouquet
