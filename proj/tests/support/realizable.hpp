#pragma once

// Random actions that the PL lift realizes as maps in the expanding class
// with a never-periodic branch point. Fixed-point formulas only hold there.

#include "bouquet/error.hpp"
#include "bouquet/pl_oracle.hpp"
#include "support/oracles.hpp"

namespace oracle {

inline bouquet::MapAction realizable_action(Generator& gen, int max_n, int max_len,
                                            std::uint64_t depth = 6) {
  for (;;) {
    bouquet::MapAction f = gen.action(max_n, max_len, true);
    try {
      bouquet::select_lift(f, depth);
      return f;
    } catch (const bouquet::DegenerateMapError&) {
    } catch (const bouquet::PreconditionError&) {
    }
  }
}

}  // namespace oracle
