#pragma once

// The fixture maps used across tests, mirroring fixtures/*.map.

#include "bouquet/words.hpp"

namespace fixtures {

inline bouquet::MapAction make(std::vector<const char*> images,
                               bouquet::BranchClass branch = bouquet::BranchClass::free()) {
  std::vector<bouquet::Word> words;
  for (const char* t : images) words.push_back(bouquet::Word::from_string(t));
  const std::size_t n = words.size();
  return bouquet::MapAction(n, std::move(words), branch);
}

inline bouquet::MapAction reversing_doubling() { return make({"a1' a1'"}); }
inline bouquet::MapAction doubling() { return make({"a1 a1"}); }
inline bouquet::MapAction lowgrow() { return make({"a1 a3", "a1", "a1 a3"}); }
inline bouquet::MapAction sixcycle() { return make({"a1", "a1 a3", "a1 a4", "a1 a2"}); }
inline bouquet::MapAction delaylowgrow() { return make({"a1", "a1 a3", "a1 a4 a4", "a1 a2"}); }
inline bouquet::MapAction m0_three() { return make({"a1", "a1 a3", "a1 a4", "a1 a2 a4"}); }

/// The five worked example maps.
inline std::vector<bouquet::MapAction> worked_examples() {
  return {reversing_doubling(), lowgrow(), sixcycle(), delaylowgrow(), m0_three()};
}

}  // namespace fixtures
