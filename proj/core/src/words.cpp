#include "bouquet/words.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "bouquet/error.hpp"
#include "bouquet/homology.hpp"

namespace bouquet {

std::string Letter::to_string() const {
  std::string out = "a" + std::to_string(generator);
  if (sign == Sign::Negative) out += '\'';
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InputError("words::Word", "empty word");
  const Sign s = letters_.front().sign;
  for (const Letter& l : letters_) {
    if (l.generator == 0)
      throw InputError("words::Word", "generator indices start at 1");
    if (l.sign != s)
      throw InputError("words::Word", "mixed-sign word " + Word::to_string());
  }
}

Word Word::from_string(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 'a')
      throw InputError("words::from_string",
                       "expected 'a' at offset " + std::to_string(pos));
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos)
      throw InputError("words::from_string",
                       "expected generator index at offset " + std::to_string(start));
    Letter letter{std::stoul(std::string(text.substr(start, pos - start))),
                  Sign::Positive};
    if (pos < text.size() && text[pos] == '\'') {
      letter.sign = Sign::Negative;
      ++pos;
    }
    letters.push_back(letter);
  }
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

BranchClass BranchClass::period(std::uint64_t k) {
  if (k == 0) throw InputError("words::BranchClass", "branch period must be >= 1");
  BranchClass result;
  result.period_ = k;
  return result;
}

std::string BranchClass::to_string() const {
  return period_ ? "period " + std::to_string(*period_) : "free";
}

std::string to_string(Orientation orientation) {
  return orientation == Orientation::Preserving ? "preserving" : "reversing";
}

MapAction::MapAction(std::size_t n, std::vector<Word> images, BranchClass branch)
    : n_(n), images_(std::move(images)), branch_(branch) {
  constexpr const char* where = "words::MapAction";
  if (n_ == 0) throw InputError(where, "n must be at least 1");
  if (images_.size() != n_)
    throw InputError(where, "expected " + std::to_string(n_) + " image words, got " +
                                std::to_string(images_.size()));
  const Sign s = images_.front().sign();
  for (std::size_t j = 0; j < n_; ++j) {
    for (const Letter& l : images_[j].letters()) {
      if (l.generator > n_)
        throw InputError(where, "letter " + l.to_string() + " in image of a" +
                                    std::to_string(j + 1) + " exceeds n=" +
                                    std::to_string(n_));
    }
    if (images_[j].sign() != s)
      throw InputError(where, "image of a" + std::to_string(j + 1) +
                                  " has a different sign than the image of a1");
  }
}

const Word& MapAction::image(std::size_t j) const {
  if (j == 0 || j > n_)
    throw InputError("words::image", "generator index " + std::to_string(j) +
                                         " outside 1.." + std::to_string(n_));
  return images_[j - 1];
}

MapAction MapAction::with_branch(BranchClass branch) const {
  return MapAction(n_, images_, branch);
}

namespace {

void require_generator(const char* where, std::size_t j) {
  if (j == 0) throw InputError(where, "generator indices start at 1");
}

long signed_count(std::span<const Letter> letters, std::size_t j) {
  long count = 0;
  for (const Letter& l : letters)
    if (l.generator == j) count += to_int(l.sign);
  return count;
}

}  // namespace

long chi(const Word& w, std::size_t j) {
  require_generator("words::chi", j);
  return signed_count(w.letters(), j);
}

long gamma(const Word& w, std::size_t j) {
  require_generator("words::gamma", j);
  if (w.size() <= 2) return 0;
  return signed_count(w.letters().subspan(1, w.size() - 2), j);
}

Word apply_endo(const MapAction& f, const Word& w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const Word& image = f.image(l.generator);
    if (l.sign == Sign::Positive) {
      out.insert(out.end(), image.letters().begin(), image.letters().end());
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return Word(std::move(out));
}

MapAction iterate_action(const MapAction& f, std::uint64_t m,
                         std::uint64_t letter_budget) {
  if (m == 0) throw InputError("words::iterate_action", "power must be >= 1");
  // Letter counts are column sums of |M^p|, so the budget is checked before
  // anything is expanded.
  const HomologyMatrix base = abelianize(f);
  HomologyMatrix power = base;
  for (std::uint64_t p = 1; p <= m; ++p) {
    if (p > 1) power = power * base;
    if (norm1(power) > BigInt(std::to_string(letter_budget)))
      throw BudgetError("words::iterate_action",
                        "f^" + std::to_string(p) + " exceeds the word budget of " +
                            std::to_string(letter_budget) + " letters",
                        p);
  }
  std::vector<Word> images(f.images().begin(), f.images().end());
  for (std::uint64_t p = 1; p < m; ++p)
    for (Word& w : images) w = apply_endo(f, w);
  return MapAction(f.n(), std::move(images), f.branch());
}

BigInt chi_of_iterate(const MapAction& f, std::uint64_t m, std::size_t j) {
  if (j == 0 || j > f.n())
    throw InputError("words::chi_of_iterate", "generator index out of range");
  return mat_pow(abelianize(f), m)(j - 1, j - 1);
}

namespace {

// first(f(w)) = first(f(first(w))), last(f(w)) = last(f(last(w))).
Letter first_of_image(const MapAction& f, const Letter& l) {
  const Word& image = f.image(l.generator);
  return l.sign == Sign::Positive ? image.front() : image.back().inverse();
}

Letter last_of_image(const MapAction& f, const Letter& l) {
  const Word& image = f.image(l.generator);
  return l.sign == Sign::Positive ? image.back() : image.front().inverse();
}

}  // namespace

Letter first_letter_of_iterate(const MapAction& f, std::uint64_t m, std::size_t j) {
  Letter current{j, Sign::Positive};
  for (std::uint64_t p = 0; p < m; ++p) current = first_of_image(f, current);
  return current;
}

Letter last_letter_of_iterate(const MapAction& f, std::uint64_t m, std::size_t j) {
  Letter current{j, Sign::Positive};
  for (std::uint64_t p = 0; p < m; ++p) current = last_of_image(f, current);
  return current;
}

BigInt gamma_of_iterate(const MapAction& f, std::uint64_t m, std::size_t j) {
  return gamma_of_iterate(f, mat_pow(abelianize(f), m), m, j);
}

BigInt gamma_of_iterate(const MapAction& f, const HomologyMatrix& power,
                        std::uint64_t m, std::size_t j) {
  if (j == 0 || j > f.n())
    throw InputError("words::gamma_of_iterate", "generator index out of range");
  if (column_norm1(power, j - 1) <= 2) return 0;
  BigInt result = power(j - 1, j - 1);
  const Letter first = first_letter_of_iterate(f, m, j);
  const Letter last = last_letter_of_iterate(f, m, j);
  if (first.generator == j) result -= to_int(first.sign);
  if (last.generator == j) result -= to_int(last.sign);
  return result;
}

Orientation orientation(const MapAction& f) {
  return f.sign() == Sign::Positive ? Orientation::Preserving
                                    : Orientation::Reversing;
}

Orientation orientation_of_iterate(const MapAction& f, std::uint64_t m) {
  if (orientation(f) == Orientation::Preserving || m % 2 == 0)
    return Orientation::Preserving;
  return Orientation::Reversing;
}

}  // namespace bouquet
