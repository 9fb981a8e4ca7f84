#include "bouquet/spec_document.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace bouquet {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  std::size_t column() const { return pos + 1; }
  void skip_space() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool eat_word(std::string_view w) {
    skip_space();
    if (text.substr(pos, w.size()) != w) return false;
    pos += w.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, column(), message);
  }
  std::uint64_t number(const char* what) {
    skip_space();
    const std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      pos = start;
      fail(std::string("expected ") + what);
    }
    std::uint64_t value = 0;
    const auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc{}) {
      pos = start;
      fail(std::string(what) + " is too large");
    }
    return value;
  }
  void expect_end() {
    skip_space();
    if (!done()) fail("unexpected text '" + std::string(text.substr(pos)) + "'");
  }
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  return line;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("cli::parse_spec",
                 "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     message),
      line_(line),
      column_(column) {}

MapSpecDocument parse_spec(std::string_view text) {
  MapSpecDocument doc;
  std::optional<std::size_t> n_line, branch_line, horizon_line;
  std::map<std::size_t, std::size_t> image_lines;  // generator -> line
  std::map<std::size_t, Word> images;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++line_no;
    Cursor cur{strip_comment(text.substr(start, end - start)), line_no};
    start = end + 1;
    cur.skip_space();
    if (cur.done()) continue;

    const std::size_t key_pos = cur.pos;
    if (cur.eat_word("n") && (cur.eat('=') || cur.eat(':'))) {
      if (n_line) cur.fail("duplicate 'n' line (first on line " + std::to_string(*n_line) + ")");
      const std::size_t value_pos = (cur.skip_space(), cur.pos);
      const std::uint64_t n = cur.number("number of circles");
      if (n == 0) {
        cur.pos = value_pos;
        cur.fail("n must be at least 1");
      }
      cur.expect_end();
      doc.n = n;
      n_line = line_no;
      continue;
    }
    cur.pos = key_pos;
    if (cur.eat_word("branch") && cur.eat(':')) {
      if (branch_line)
        cur.fail("duplicate 'branch' line (first on line " + std::to_string(*branch_line) + ")");
      if (cur.eat_word("free")) {
        doc.branch = BranchClass::free();
      } else if (cur.eat_word("period")) {
        const std::size_t value_pos = (cur.skip_space(), cur.pos);
        const std::uint64_t k = cur.number("branch period");
        if (k == 0) {
          cur.pos = value_pos;
          cur.fail("branch period must be at least 1");
        }
        doc.branch = BranchClass::period(k);
      } else {
        cur.fail("expected 'free' or 'period <k>'");
      }
      cur.expect_end();
      branch_line = line_no;
      continue;
    }
    cur.pos = key_pos;
    if (cur.eat_word("horizon") && cur.eat(':')) {
      if (horizon_line)
        cur.fail("duplicate 'horizon' line (first on line " + std::to_string(*horizon_line) + ")");
      const std::size_t value_pos = (cur.skip_space(), cur.pos);
      doc.horizon = cur.number("horizon");
      if (doc.horizon == 0) {
        cur.pos = value_pos;
        cur.fail("horizon must be at least 1");
      }
      cur.expect_end();
      horizon_line = line_no;
      continue;
    }
    cur.pos = key_pos;
    if (cur.peek() != 'a') cur.fail("expected 'n=', 'branch:', 'horizon:' or an image line");
    ++cur.pos;
    const std::size_t gen_pos = cur.pos;
    const std::uint64_t generator = cur.number("generator index after 'a'");
    if (!n_line) cur.fail("image line before the 'n=' line");
    if (generator == 0 || generator > doc.n) {
      cur.pos = gen_pos - 1;
      cur.fail("generator a" + std::to_string(generator) + " out of range 1.." +
               std::to_string(doc.n));
    }
    if (auto it = image_lines.find(generator); it != image_lines.end()) {
      cur.pos = key_pos;
      cur.fail("duplicate image line for a" + std::to_string(generator) + " (first on line " +
               std::to_string(it->second) + ")");
    }
    if (!cur.eat_word("->")) cur.fail("expected '->'");
    std::vector<Letter> letters;
    for (cur.skip_space(); !cur.done(); cur.skip_space()) {
      const std::size_t letter_pos = cur.pos;
      if (cur.peek() != 'a') cur.fail("expected a letter 'a<k>' or 'a<k>''");
      ++cur.pos;
      const std::uint64_t index = cur.number("generator index after 'a'");
      Letter letter{index, Sign::Positive};
      if (cur.peek() == '\'') {
        letter.sign = Sign::Negative;
        ++cur.pos;
      }
      if (index == 0 || index > doc.n) {
        cur.pos = letter_pos;
        cur.fail("letter " + letter.to_string() + " out of range a1..a" + std::to_string(doc.n));
      }
      if (!letters.empty() && letters.front().sign != letter.sign) {
        cur.pos = letter_pos;
        cur.fail("mixed-sign word: " + letter.to_string() + " differs in sign from " +
                 letters.front().to_string());
      }
      letters.push_back(letter);
    }
    if (letters.empty()) cur.fail("empty image word");
    image_lines[generator] = line_no;
    images.emplace(generator, Word(std::move(letters)));
  }

  if (!n_line) throw ParseError(line_no, 1, "missing 'n=' line");
  if (!branch_line) throw ParseError(line_no, 1, "missing 'branch:' line");
  for (std::size_t j = 1; j <= doc.n; ++j) {
    auto it = images.find(j);
    if (it == images.end())
      throw ParseError(*n_line, 1, "missing image line for generator a" + std::to_string(j));
    doc.images.push_back(it->second);
  }
  for (std::size_t j = 1; j < doc.images.size(); ++j)
    if (doc.images[j].sign() != doc.images.front().sign())
      throw ParseError(image_lines[j + 1], 1,
                       "image of a" + std::to_string(j + 1) +
                           " has a different sign from the image of a1");
  return doc;
}

std::string print_spec(const MapSpecDocument& doc) {
  std::ostringstream out;
  out << "n=" << doc.n << '\n';
  out << "branch: "
      << (doc.branch.is_free() ? std::string("free")
                               : "period " + std::to_string(*doc.branch.period()))
      << '\n';
  for (std::size_t j = 0; j < doc.images.size(); ++j) {
    out << 'a' << j + 1 << " ->";
    for (const Letter& l : doc.images[j].letters()) out << ' ' << l.to_string();
    out << '\n';
  }
  out << "horizon: " << doc.horizon << '\n';
  return out.str();
}

}  // namespace bouquet
