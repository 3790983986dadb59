#pragma once

#include <string>

#include "lexpref/json_io.hpp"

namespace lexpref {

// Canned demonstrations, each pinned to its canonical grid:
//   semiorder-cycle  a verified strict-preference 3-cycle under the
//                    lexicographic semiorder with eps=1, plus the
//                    transitivity verdict that flags it
//   table1           the three noncompensation conditions on the
//                    lexicographic / ex2 / lexi-max trio (grid 3:8:1)
//   robustness       the four axiom families on ex2 / dominant / perfect
//                    substitutes / lexi-max (grid 3:8:1, schedule 2:0.5:1)
// Throws SpecError for unknown names.
json run_demo(const std::string& name);

}  // namespace lexpref
