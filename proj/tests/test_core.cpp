#include <doctest.h>

#include <random>

#include "lexpref/core.hpp"
#include "lexpref/grid.hpp"
#include "lexpref/zoo.hpp"

using namespace lexpref;
using CO = ComparisonOutcome;

namespace {

Alternative random_point(std::mt19937_64& rng, std::size_t n, double max, double step) {
    std::vector<double> coords(n);
    const std::size_t levels = static_cast<std::size_t>(max / step) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        coords[i] = static_cast<double>(rng() % levels) * step;
    }
    return Alternative(coords);
}

std::vector<PreferenceOracle> sample_zoo_3d() {
    return {make_lexicographic({0, 1, 2}), make_pairwise_lex_ex2(), make_leximax(3),
            make_perfect_substitutes(3),   make_min_multiplicative(), make_ex0(),
            make_ex01(),                   make_dominant(3, 0),
            make_noncomparable_indifferent(), make_noncomparable_incomplete()};
}

}  // namespace

TEST_CASE("alternative validation") {
    CHECK_THROWS_AS(Alternative({-1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(Alternative(std::vector<double>{}), DomainError);
    const Alternative a{2.0, 3.0, 1.0};
    CHECK(a.dimension() == 3);
    CHECK(a[1] == 3.0);
    CHECK(a.to_string() == "(2,3,1)");
}

TEST_CASE("compare dispatches and checks dimensions") {
    const auto lex = make_lexicographic({0, 1, 2});
    CHECK(compare(lex, {1, 0, 0}, {0, 9, 9}) == CO::FirstStrict);
    CHECK(compare(lex, {2, 3, 1}, {2, 3, 1}) == CO::Indifferent);
    const auto ex2 = make_pairwise_lex_ex2();
    CHECK(compare(ex2, {0, 6, 1}, {0, 4, 8}) == CO::FirstStrict);
    CHECK_THROWS_AS(compare(lex, Alternative{1, 2}, Alternative{1, 2, 3}), DimensionError);
}

TEST_CASE("totally_different") {
    CHECK(totally_different({2, 1, 1}, {0, 2, 2}));
    CHECK_FALSE(totally_different({1, 2}, {1, 3}));
    CHECK(totally_different({4, 2}, {1, 4}));
    CHECK_THROWS_AS(totally_different(Alternative{1, 2}, Alternative{1, 2, 3}), DimensionError);
}

TEST_CASE("totally_different is symmetric on random pairs") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        const auto x = random_point(rng, 3, 4, 1);
        const auto y = random_point(rng, 3, 4, 1);
        CHECK(totally_different(x, y) == totally_different(y, x));
    }
}

TEST_CASE("attribute subsets") {
    const auto s = AttributeSubset::from_one_based({3, 2});
    CHECK(s.members() == std::vector<std::size_t>{1, 2});
    CHECK(s.to_string() == "{2,3}");
    CHECK_THROWS_AS(AttributeSubset::from_zero_based({}), SubsetError);
    CHECK_THROWS_AS(AttributeSubset::from_zero_based({1, 1}), SubsetError);
    CHECK_THROWS_AS(AttributeSubset::from_one_based({0}), SubsetError);
}

TEST_CASE("induce: lexicographic restriction stays lexicographic") {
    const auto induced = induce(make_lexicographic({0, 1, 2}), AttributeSubset::from_one_based({2, 3}));
    CHECK(induced.dimension() == 2);
    CHECK(induced.compare({5, 1}, {4, 9}) == CO::FirstStrict);
    CHECK(induced.name() == "induced(lex:1,2,3;S={2,3})");
}

TEST_CASE("induce: ex2 rule (b) and dominant degenerate subset") {
    const auto ex2_23 = induce(make_pairwise_lex_ex2(), AttributeSubset::from_one_based({2, 3}));
    CHECK(ex2_23.compare({6, 1}, {4, 8}) == CO::FirstStrict);
    const auto dom_23 = induce(make_dominant(3, 0), AttributeSubset::from_one_based({2, 3}));
    CHECK(dom_23.compare({1, 1}, {0, 0}) == CO::Indifferent);
    CHECK(dom_23.compare({9, 0}, {0, 9}) == CO::Indifferent);
    CHECK_THROWS_AS(induce(make_dominant(3, 0), AttributeSubset::from_one_based({3, 4})),
                    SubsetError);
}

TEST_CASE("induced preferences delegate exactly to the parent") {
    const Grid g(2, 4, 1);
    std::mt19937_64 rng(11);
    for (const auto& oracle : sample_zoo_3d()) {
        const auto s = AttributeSubset::from_one_based({1, 3});
        const auto induced = induce(oracle, s);
        for (int k = 0; k < 50; ++k) {
            const auto a = g.point(rng() % g.size());
            const auto b = g.point(rng() % g.size());
            CHECK(induced.compare(a, b) == oracle.compare(embed(a, s, 3), embed(b, s, 3)));
        }
    }
}

TEST_CASE("inducing on the full attribute set changes nothing") {
    const Grid g(3, 2, 1);
    const auto s = AttributeSubset::from_one_based({1, 2, 3});
    for (const auto& oracle : sample_zoo_3d()) {
        const auto induced = induce(oracle, s);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) {
                CHECK(induced.compare(g.point(i), g.point(j)) ==
                      oracle.compare(g.point(i), g.point(j)));
            }
        }
    }
}

TEST_CASE("antisymmetry of strict outcomes across the zoo") {
    const Grid g(3, 4, 1);
    std::mt19937_64 rng(23);
    for (const auto& oracle : sample_zoo_3d()) {
        for (int k = 0; k < 300; ++k) {
            const auto& x = g.point(rng() % g.size());
            const auto& y = g.point(rng() % g.size());
            const CO fwd = oracle.compare(x, y);
            const CO bwd = oracle.compare(y, x);
            CHECK(bwd == mirror(fwd));
        }
    }
}

TEST_CASE("strict_sets: examples") {
    // Attribute numbers below are 0-based (paper counts from 1).
    const auto s1 = strict_sets({0, 6, 1}, {0, 4, 8});
    CHECK(s1.m_first == std::vector<std::size_t>{1});
    CHECK(s1.m_second == std::vector<std::size_t>{2});
    CHECK(s1.equal == std::vector<std::size_t>{0});

    const auto s2 = strict_sets({1, 1}, {1, 1});
    CHECK(s2.m_first.empty());
    CHECK(s2.m_second.empty());
    CHECK(s2.equal == std::vector<std::size_t>{0, 1});

    const auto s3 = strict_sets({4, 2}, {1, 4});
    CHECK(s3.m_first == std::vector<std::size_t>{0});
    CHECK(s3.m_second == std::vector<std::size_t>{1});
    CHECK(s3.equal.empty());

    CHECK_THROWS_AS(strict_sets(Alternative{1}, Alternative{1, 2}), DimensionError);
}

TEST_CASE("strict_sets always partitions the attribute set") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 1 + rng() % 5;
        const auto x = random_point(rng, n, 3, 0.5);
        const auto y = random_point(rng, n, 3, 0.5);
        const auto s = strict_sets(x, y);
        std::vector<bool> seen(n, false);
        for (auto part : {&s.m_first, &s.m_second, &s.equal}) {
            for (std::size_t attr : *part) {
                CHECK_FALSE(seen[attr]);
                seen[attr] = true;
            }
        }
        for (std::size_t i = 0; i < n; ++i) CHECK(seen[i]);
    }
}
