#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bouquet/error.hpp"
#include "bouquet/words.hpp"

namespace bouquet {

inline constexpr std::uint64_t kDefaultHorizon = 12;

/// A map description in the text format
///
///   n=3
///   branch: free            (or: branch: period 2)
///   a1 -> a1 a3
///   a2 -> a1
///   a3 -> a1 a3
///   horizon: 12             (optional)
///
/// Blank lines and text after '#' are ignored.
struct MapSpecDocument {
  std::size_t n = 0;
  BranchClass branch;
  std::vector<Word> images;
  std::uint64_t horizon = kDefaultHorizon;

  MapAction action() const { return MapAction(n, images, branch); }
  bool operator==(const MapSpecDocument&) const = default;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

MapSpecDocument parse_spec(std::string_view text);

/// Canonical text form; parse_spec(print_spec(doc)) == doc.
std::string print_spec(const MapSpecDocument& doc);

}  // namespace bouquet
