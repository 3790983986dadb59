#pragma once

// Test-only reference comparator: a from-scratch implementation of the
// lexicographic decision rule, kept independent of the library path so the
// two can be checked against each other.

#include <cstddef>
#include <vector>

#include "lexpref/core.hpp"

namespace testref {

// order: 0-based attribute indices, most important first.
inline lexpref::ComparisonOutcome reference_lex_compare(const std::vector<std::size_t>& order,
                                                        const lexpref::Alternative& x,
                                                        const lexpref::Alternative& y) {
    for (std::size_t attr : order) {
        const double a = x[attr];
        const double b = y[attr];
        if (a != b) {
            return a > b ? lexpref::ComparisonOutcome::FirstStrict
                         : lexpref::ComparisonOutcome::SecondStrict;
        }
    }
    return lexpref::ComparisonOutcome::Indifferent;
}

}  // namespace testref
