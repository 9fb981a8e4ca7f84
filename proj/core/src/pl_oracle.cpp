#include "bouquet/pl_oracle.hpp"

#include <algorithm>
#include <sstream>

#include "bouquet/error.hpp"
#include "bouquet/homology.hpp"

namespace bouquet {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Image word of a_j as traversed by the branch-free construction.
std::vector<Letter> rooted_letters(const MapAction& f, std::size_t j) {
  const auto letters = f.image(j).letters();
  std::vector<Letter> out(letters.begin(), letters.end());
  if (out.front().generator == 1) return out;
  if (out.back().generator == 1) {
    std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
    return out;
  }
  throw PreconditionError("pl_oracle::build_lift",
                          "image of a" + std::to_string(j) +
                              " must start or end with a1 or a1' when the branch point is free");
}

struct Segment {
  Rational from;
  Rational to;
};

// Traversal of circle j as a list of (from, to) runs through target values.
std::vector<Segment> traversal(const std::vector<Letter>& letters, LiftConstruction construction,
                               const Rational& base) {
  std::vector<Segment> out;
  const bool positive = letters.front().sign == Sign::Positive;
  auto full = [&](const Letter& l) {
    const Rational lo = static_cast<long>(l.generator) - 1;
    const Rational hi = static_cast<long>(l.generator);
    return positive ? Segment{lo, hi} : Segment{hi, lo};
  };
  if (construction == LiftConstruction::BranchFixed) {
    for (const Letter& l : letters) out.push_back(full(l));
    return out;
  }
  out.push_back(positive ? Segment{base, 1} : Segment{base, 0});
  for (std::size_t k = 1; k < letters.size(); ++k) out.push_back(full(letters[k]));
  out.push_back(positive ? Segment{0, base} : Segment{1, base});
  return out;
}

void check_unit_slope_dynamics(const PLLift& lift, std::uint64_t depth) {
  std::vector<LinearPiece> unit;
  for (const auto& p : lift.pieces())
    if (abs(p.slope) == 1) unit.push_back(p);
  if (unit.empty() || depth == 0) return;
  const PLLift unit_lift(lift.n(), lift.base(), lift.construction(), unit);
  std::vector<LinearPiece> current = unit;
  for (std::uint64_t m = 1; m <= depth && !current.empty(); ++m) {
    for (const auto& p : current) {
      if (p.slope == 1) {
        if (p.intercept == 0)
          throw DegenerateMapError("pl_oracle::build_lift",
                                   "iterate " + std::to_string(m) +
                                       " is the identity on a piece of slope 1");
        continue;
      }
      const Rational x = p.intercept / (1 - p.slope);
      if (x >= p.lo && x <= p.hi && !is_integer(x))
        throw DegenerateMapError("pl_oracle::build_lift",
                                 "iterate " + std::to_string(m) + " has a fixed point " +
                                     to_fraction_string(x) + " on a piece of slope -1");
    }
    if (m == depth) break;
    // Restrict to orbits that stay on unit-slope pieces.
    std::vector<LinearPiece> next;
    for (const auto& p : current) {
      const Rational ya = p.at(p.lo), yb = p.at(p.hi);
      const Rational ylo = std::min(ya, yb), yhi = std::max(ya, yb);
      for (const auto& q : unit) {
        const Rational u = std::max(q.lo, ylo), v = std::min(q.hi, yhi);
        if (u >= v) continue;
        const Rational xu = (u - p.intercept) / p.slope, xv = (v - p.intercept) / p.slope;
        next.push_back({std::min(xu, xv), std::max(xu, xv), q.slope * p.slope,
                        q.slope * p.intercept + q.intercept});
      }
    }
    current = std::move(next);
  }
}

}  // namespace

PLLift::PLLift(std::size_t n, Rational base, LiftConstruction construction,
               std::vector<LinearPiece> pieces)
    : n_(n), base_(std::move(base)), construction_(construction), pieces_(std::move(pieces)) {}

std::size_t PLLift::piece_index(const Rational& x) const {
  if (pieces_.empty() || x < pieces_.front().lo || x > pieces_.back().hi)
    throw InputError("pl_oracle::evaluate", "point " + to_fraction_string(x) + " outside [0, n]");
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Rational& v, const LinearPiece& p) { return v < p.lo; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

Rational PLLift::evaluate(const Rational& x) const { return pieces_[piece_index(x)].at(x); }

std::string PLLift::dump() const {
  std::ostringstream out;
  for (const auto& p : pieces_)
    out << to_fraction_string(p.lo) << ' ' << to_fraction_string(p.hi) << ' '
        << to_fraction_string(p.slope) << ' ' << to_fraction_string(p.intercept) << '\n';
  return out.str();
}

PLLift build_lift(const MapAction& f, const LiftOptions& options) {
  const auto declared = f.branch().period();
  const LiftConstruction construction =
      options.construction.value_or(declared && *declared == 1 ? LiftConstruction::BranchFixed
                                                               : LiftConstruction::BranchFree);
  Rational base = construction == LiftConstruction::BranchFree ? options.base : Rational(0);
  if (construction == LiftConstruction::BranchFree) {
    if (base <= 0 || base >= 1)
      throw InputError("pl_oracle::build_lift", "base height must lie strictly inside (0, 1)");
    const HomologyMatrix d = abelianize(f);
    bool column_one_inner_zero = true;
    for (std::size_t i = 1; i < f.n(); ++i)
      if (d(i, 0) != 0) column_one_inner_zero = false;
    if (column_one_inner_zero && d(0, 0) == -1)
      throw PreconditionError("pl_oracle::build_lift",
                              "d_11 = -1 with d_j1 = 0 for all j > 1 admits no expanding lift");
  }
  std::vector<LinearPiece> pieces;
  for (std::size_t j = 1; j <= f.n(); ++j) {
    const auto letters = construction == LiftConstruction::BranchFree
                             ? rooted_letters(f, j)
                             : std::vector<Letter>(f.image(j).letters().begin(),
                                                   f.image(j).letters().end());
    const long len = static_cast<long>(letters.size());
    const Rational slope = letters.front().sign == Sign::Positive ? Rational(len) : Rational(-len);
    Rational x = static_cast<long>(j) - 1;
    for (const Segment& s : traversal(letters, construction, base)) {
      const Rational width = abs(s.to - s.from) / len;
      if (width == 0) continue;
      pieces.push_back({x, x + width, slope, s.from - slope * x});
      x += width;
    }
  }
  pieces.back().hi = static_cast<long>(f.n());
  PLLift lift(f.n(), base, construction, std::move(pieces));
  check_unit_slope_dynamics(lift, options.degeneracy_depth);
  return lift;
}

PLLift select_lift(const MapAction& f, std::uint64_t depth) {
  static const long kCandidates[][2] = {{1, 2},   {1, 3},   {2, 5},   {3, 7},
                                        {8, 13},  {13, 21}, {21, 34}, {34, 55},
                                        {55, 89}, {89, 144}, {144, 233}};
  const std::uint64_t orbit_depth = std::max<std::uint64_t>(depth, 12);
  std::string last_failure = "no candidate base height";
  for (const auto& c : kCandidates) {
    LiftOptions options;
    options.base = rational(c[0], c[1]);
    options.degeneracy_depth = depth;
    try {
      PLLift lift = build_lift(f, options);
      if (lift.construction() == LiftConstruction::BranchFixed) return lift;
      if (const auto hit = branch_return(lift, orbit_depth)) {
        last_failure = "branch orbit reaches an integer after " + std::to_string(*hit) +
                       " steps at base " + to_fraction_string(options.base);
        continue;
      }
      return lift;
    } catch (const DegenerateMapError& e) {
      last_failure = e.what();
    }
  }
  throw DegenerateMapError("pl_oracle::select_lift", last_failure);
}

PLLift compose(const PLLift& outer, const PLLift& inner, std::size_t piece_budget) {
  const auto& targets = outer.pieces();
  std::vector<LinearPiece> out;
  std::vector<LinearPiece> local;
  for (const auto& p : inner.pieces()) {
    const Rational ya = p.at(p.lo), yb = p.at(p.hi);
    const Rational& ylo = ya < yb ? ya : yb;
    const Rational& yhi = ya < yb ? yb : ya;
    auto it = std::upper_bound(targets.begin(), targets.end(), ylo,
                               [](const Rational& v, const LinearPiece& q) { return v < q.hi; });
    local.clear();
    for (; it != targets.end() && it->lo < yhi; ++it) {
      const Rational u = std::max(it->lo, ylo), v = std::min(it->hi, yhi);
      if (u >= v) continue;
      Rational xu = (u - p.intercept) / p.slope, xv = (v - p.intercept) / p.slope;
      if (xv < xu) std::swap(xu, xv);
      local.push_back({std::move(xu), std::move(xv), it->slope * p.slope,
                       it->slope * p.intercept + it->intercept});
    }
    if (p.slope < 0) std::reverse(local.begin(), local.end());
    for (auto& piece : local) out.push_back(std::move(piece));
    if (out.size() > piece_budget)
      throw BudgetError("pl_oracle::compose", "piece budget exceeded", 0);
  }
  return PLLift(inner.n(), inner.base(), inner.construction(), std::move(out));
}

PLLift iterate_lift(const PLLift& lift, std::uint64_t m, std::size_t piece_budget) {
  if (m == 0) throw InputError("pl_oracle::iterate_lift", "m must be at least 1");
  PLLift current = lift;
  for (std::uint64_t p = 2; p <= m; ++p) {
    try {
      current = compose(lift, current, piece_budget);
    } catch (const BudgetError&) {
      throw BudgetError("pl_oracle::iterate_lift",
                        "piece budget of " + std::to_string(piece_budget) + " exceeded at power " +
                            std::to_string(p) + "; largest feasible power is " +
                            std::to_string(p - 1),
                        p);
    }
  }
  return current;
}

std::uint64_t count_fixed_points(const PLLift& iterated) {
  std::uint64_t count = 0;
  const auto& pieces = iterated.pieces();
  const Rational n = static_cast<long>(iterated.n());
  for (std::size_t b = 0; b < pieces.size(); ++b) {
    const auto& p = pieces[b];
    if (p.slope == 1) {
      if (p.intercept == 0)
        throw DegenerateMapError("pl_oracle::count_fixed",
                                 "piece [" + to_fraction_string(p.lo) + ", " +
                                     to_fraction_string(p.hi) + "] lies on the diagonal");
      continue;
    }
    const Rational x = p.intercept / (1 - p.slope);
    const bool owned = x >= p.lo && (x < p.hi || (b + 1 == pieces.size() && x == n));
    if (!owned || is_integer(x)) continue;
    if (p.slope == -1)
      throw DegenerateMapError("pl_oracle::count_fixed",
                               "fixed point " + to_fraction_string(x) + " on a piece of slope -1");
    ++count;
  }
  if (is_integer(iterated.evaluate(0))) ++count;
  return count;
}

std::uint64_t count_fixed(const PLLift& lift, std::uint64_t m) {
  return count_fixed_points(iterate_lift(lift, m));
}

std::uint64_t integer_preimages(const PLLift& iterated) {
  std::uint64_t count = 0;
  for (const auto& p : iterated.pieces())
    if (is_integer(p.at(p.lo))) ++count;
  return count;
}

std::uint64_t mono_cover_size(const PLLift& lift) { return integer_preimages(lift); }

std::uint64_t cover_growth(const PLLift& lift, std::uint64_t m) {
  return integer_preimages(iterate_lift(lift, m));
}

std::vector<Rational> branch_orbit(const PLLift& lift, std::uint64_t m) {
  std::vector<Rational> orbit;
  Rational x = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    x = lift.evaluate(x);
    orbit.push_back(x);
  }
  return orbit;
}

std::optional<std::uint64_t> branch_return(const PLLift& lift, std::uint64_t m) {
  const auto orbit = branch_orbit(lift, m);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    if (is_integer(orbit[i])) return i + 1;
  return std::nullopt;
}

}  // namespace bouquet
