#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lexpref/core.hpp"

namespace lexpref {

// Built-in preference oracles. Each reproduces one of the example
// preferences discussed in the literature on lexicographic choice; together
// they form the ground-truth corpus for the checkers and the classifier.
//
// All constructors return pure, stateless oracles whose names are the
// canonical spec strings accepted by parse_oracle_spec (the CLI contract).

// The lexicographic preference for a given importance order (0-based
// permutation, most important attribute first). Higher levels are better.
PreferenceOracle make_lexicographic(std::vector<std::size_t> order);

// Lexicographic comparison of the descending order statistics: the largest
// levels are compared first, regardless of which attribute carries them.
PreferenceOracle make_leximax(std::size_t n);

// u(x) = x[attr]: the individual cares exclusively about one attribute.
PreferenceOracle make_dominant(std::size_t n, std::size_t attr);

// u(x) = sum of all levels (perfect substitutes).
PreferenceOracle make_perfect_substitutes(std::size_t n);

// u(x1,x2,x3) = min{x1,x2} + min{x1,x2} * x3 on dimension 3.
PreferenceOracle make_min_multiplicative();

// u(x1,x2) = x1^alpha * x2^(1-alpha), alpha in (0,1), dimension 2.
// Comparison goes through u^q with a small rational exponent alpha = p/q
// when one exists, so ties between grid points stay exact.
PreferenceOracle make_cobb_douglas(double alpha);

// The three-attribute preference that is pairwise lexicographic but not
// lexicographic: attribute 1 decides when it differs; at a shared zero of
// attribute 1 the rest is ordered lexicographically; at a shared positive
// level of attribute 1 the remaining levels are perfect substitutes.
PreferenceOracle make_pairwise_lex_ex2();

// Three-attribute preference whose 2-attribute induced preferences are all
// mildly continuous while the preference itself is not.
PreferenceOracle make_ex0();

// The mirror image: the preference is mildly continuous, none of its
// 2-attribute induced preferences are.
PreferenceOracle make_ex01();

// The classic lexicographic semiorder on two attributes: the top attribute
// decides only when its difference exceeds eps, otherwise the second
// attribute decides. Complete but not transitive.
PreferenceOracle make_lex_semiorder(double eps, std::array<std::size_t, 2> order = {0, 1});

// Reflexive, strong monotone, and indifferent between any two points that
// are non-comparable in the dominance order. Complete but not transitive.
PreferenceOracle make_noncomparable_indifferent(std::size_t n = 3);

// Reflexive, strong monotone, and Incomparable on any dominance-incomparable
// pair. Transitive but not complete.
PreferenceOracle make_noncomparable_incomplete(std::size_t n = 3);

// Spec-string grammar (also the `zoo list` contract):
//   lex:1,2,3        lexicographic, 1-based order, most important first
//   leximax:3        lexi-max on n attributes
//   dominant:1       dominant attribute (1-based), dimension 3
//   perfsub:3        perfect substitutes on n attributes
//   minmul           min-multiplicative, dimension 3
//   cobb:0.5         Cobb-Douglas with exponent alpha, dimension 2
//   ex2              pairwise-lexicographic-but-not-lexicographic, dimension 3
//   ex0              induced mildly continuous, preference not, dimension 3
//   ex01             preference mildly continuous, induced not, dimension 3
//   semiorder:eps=1[,order=2,1]   lexicographic semiorder, dimension 2
//   noncomp-indiff   complete, not transitive, dimension 3
//   noncomp-incomplete  transitive, not complete, dimension 3
PreferenceOracle parse_oracle_spec(const std::string& spec);

struct ZooEntry {
    std::string id;           // grammar stem, e.g. "lex"
    std::string example;      // a complete spec string, e.g. "lex:1,2,3"
    std::string description;
    std::string dimension;    // "n" for parametric kinds, a digit otherwise
};

// Catalog of the built-in oracle kinds, in stable order.
std::vector<ZooEntry> zoo_catalog();

}  // namespace lexpref
