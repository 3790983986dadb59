#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "lexpref/core.hpp"
#include "lexpref/grid.hpp"
#include "lexpref/zoo.hpp"

using namespace lexpref;
using CO = ComparisonOutcome;

TEST_CASE("lexicographic comparator") {
    const auto lex123 = make_lexicographic({0, 1, 2});
    CHECK(lex123.compare({1, 0, 0}, {0, 9, 9}) == CO::FirstStrict);
    CHECK(lex123.compare({2, 3, 1}, {2, 3, 5}) == CO::SecondStrict);
    const auto lex21 = make_lexicographic({1, 0});
    CHECK(lex21.compare({0, 1}, {9, 0}) == CO::FirstStrict);
    CHECK_THROWS_AS(make_lexicographic({0, 0, 1}), SpecError);
    CHECK_THROWS_AS(make_lexicographic({1, 2}), SpecError);
}

TEST_CASE("leximax compares order statistics") {
    const auto lm = make_leximax(2);
    CHECK(lm.compare({4, 2}, {1, 4}) == CO::FirstStrict);
    CHECK(lm.compare({3, 4}, {4, 2}) == CO::FirstStrict);
    const auto lm3 = make_leximax(3);
    CHECK(lm3.compare({1, 2, 3}, {3, 2, 1}) == CO::Indifferent);
    CHECK_THROWS_AS(make_leximax(1), SpecError);
}

TEST_CASE("leximax is invariant under coordinate permutations") {
    const auto lm = make_leximax(3);
    const Grid g(3, 4, 1);
    std::mt19937_64 rng(41);
    const std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int k = 0; k < 200; ++k) {
        const auto& x = g.point(rng() % g.size());
        const auto& y = g.point(rng() % g.size());
        const CO base = lm.compare(x, y);
        for (const auto& p : perms) {
            const Alternative px{x[p[0]], x[p[1]], x[p[2]]};
            const Alternative py{y[p[0]], y[p[1]], y[p[2]]};
            CHECK(lm.compare(px, py) == base);
        }
    }
}

TEST_CASE("utility oracles") {
    const auto mm = make_min_multiplicative();
    CHECK(mm.compare({4, 2, 2}, {1, 2, 2}) == CO::FirstStrict);  // u: 6 vs 3
    CHECK(mm.compare({4, 0.5, 3}, {1, 0.5, 3}) == CO::Indifferent);  // u: 2 vs 2
    const auto dom = make_dominant(3, 0);
    CHECK(dom.compare({5, 0, 0}, {4, 9, 9}) == CO::FirstStrict);
    const auto ps = make_perfect_substitutes(2);
    CHECK(ps.compare({1, 3}, {2, 2}) == CO::Indifferent);
    CHECK_THROWS_AS(make_cobb_douglas(0.0), SpecError);
    CHECK_THROWS_AS(make_cobb_douglas(1.5), SpecError);
}

TEST_CASE("cobb-douglas ties between grid points are exact") {
    const auto cobb = make_cobb_douglas(0.5);
    CHECK(cobb.compare({1, 4}, {2, 2}) == CO::Indifferent);
    CHECK(cobb.compare({1, 8}, {2, 4}) == CO::Indifferent);
    CHECK(cobb.compare({2, 4}, {8, 1}) == CO::Indifferent);
    CHECK(cobb.compare({3, 3}, {2, 4}) == CO::FirstStrict);  // 9 vs 8
    CHECK(cobb.compare({0, 9}, {1, 1}) == CO::SecondStrict);
}

TEST_CASE("ex2 reproduces all five case rules") {
    const auto ex2 = make_pairwise_lex_ex2();
    CHECK(ex2.compare({1, 0, 0}, {0, 9, 9}) == CO::FirstStrict);   // (a)
    CHECK(ex2.compare({0, 6, 1}, {0, 4, 8}) == CO::FirstStrict);   // (b)
    CHECK(ex2.compare({0, 4, 8}, {0, 4, 7}) == CO::FirstStrict);   // (c)
    CHECK(ex2.compare({1, 4, 7}, {1, 5, 4}) == CO::FirstStrict);   // (d): 11 > 9
    CHECK(ex2.compare({2, 3, 4}, {2, 5, 2}) == CO::Indifferent);   // (e): 7 = 7
    CHECK(ex2.compare({0, 4, 4}, {0, 4, 4}) == CO::Indifferent);
}

TEST_CASE("ex0 case split") {
    const auto ex0 = make_ex0();
    CHECK(ex0.compare({2, 1, 1}, {0, 2, 2}) == CO::FirstStrict);  // (B)(i)
    // Shared zero: totals decide.
    CHECK(ex0.compare({0, 2, 2}, {0, 1, 2}) == CO::FirstStrict);
    CHECK(ex0.compare({0, 1, 3}, {0, 2, 2}) == CO::Indifferent);
    // (B)(ii): both minima positive, totals decide.
    CHECK(ex0.compare({1, 2, 2}, {2, 1, 1}) == CO::FirstStrict);
    // (B)(i) zero minima on both sides.
    CHECK(ex0.compare({0, 1, 2}, {3, 0, 4}) == CO::Indifferent);
}

TEST_CASE("ex01 case split") {
    const auto ex01 = make_ex01();
    // One shared zero: the remaining two attributes compare by minima.
    CHECK(ex01.compare({1, 1, 0}, {0, 2, 0}) == CO::FirstStrict);
    CHECK(ex01.compare({0, 1, 1}, {0, 0, 2}) == CO::FirstStrict);
    CHECK(ex01.compare({2, 2, 0}, {1, 2, 0}) == CO::FirstStrict);  // both positive: sums
    CHECK(ex01.compare({1, 3, 0}, {2, 2, 0}) == CO::Indifferent);
    // Two shared zeros: indifferent.
    CHECK(ex01.compare({0, 0, 3}, {0, 0, 5}) == CO::Indifferent);
    // No shared zero: sums.
    CHECK(ex01.compare({2, 1, 1}, {1, 2, 3}) == CO::SecondStrict);
}

TEST_CASE("lexicographic semiorder produces the eps=1 cycle") {
    const auto so = make_lex_semiorder(1.0);
    const Alternative a{1.0, 3.0};
    const Alternative b{1.5, 2.0};
    const Alternative c{2.5, 1.0};
    CHECK(so.compare(a, b) == CO::FirstStrict);   // |d1| <= eps, attribute 2 decides
    CHECK(so.compare(b, c) == CO::FirstStrict);   // |d1| = 1 <= eps, attribute 2 decides
    CHECK(so.compare(c, a) == CO::FirstStrict);   // d1 = 1.5 > eps
    CHECK_FALSE(so.declared_transitive());
    CHECK_THROWS_AS(make_lex_semiorder(0.0), SpecError);
}

TEST_CASE("semiorder order parameter swaps the deciding attribute") {
    const auto so = make_lex_semiorder(1.0, {1, 0});
    CHECK(so.compare({3, 0}, {0, 0.5}) == CO::FirstStrict);  // |d2|=0.5<=1, attr 1 decides
    CHECK(so.compare({9, 0}, {0, 2}) == CO::SecondStrict);   // d2=-2 exceeds eps
}

TEST_CASE("non-comparable variants") {
    const auto indiff = make_noncomparable_indifferent();
    CHECK(indiff.compare({1, 2, 0}, {2, 1, 0}) == CO::Indifferent);
    CHECK(indiff.compare({2, 1, 0}, {2, 0, 0}) == CO::FirstStrict);
    CHECK(indiff.declared_complete());
    CHECK_FALSE(indiff.declared_transitive());

    const auto inc = make_noncomparable_incomplete();
    CHECK(inc.compare({1, 2, 0}, {2, 1, 0}) == CO::Incomparable);
    CHECK(inc.compare({2, 2, 0}, {2, 1, 0}) == CO::FirstStrict);
    CHECK(inc.compare({1, 2, 0}, {1, 2, 0}) == CO::Indifferent);
    CHECK_FALSE(inc.declared_complete());
}

TEST_CASE("noncomp-indiff has a 3-point transitivity violation on the 3^3 grid") {
    // Independent brute-force scan over all triples.
    const auto oracle = make_noncomparable_indifferent();
    const Grid g(3, 2, 1);
    bool found = false;
    for (std::size_t i = 0; i < g.size() && !found; ++i) {
        for (std::size_t j = 0; j < g.size() && !found; ++j) {
            for (std::size_t k = 0; k < g.size() && !found; ++k) {
                if (weakly_prefers(oracle.compare(g.point(i), g.point(j))) &&
                    weakly_prefers(oracle.compare(g.point(j), g.point(k))) &&
                    !weakly_prefers(oracle.compare(g.point(i), g.point(k)))) {
                    found = true;
                }
            }
        }
    }
    CHECK(found);
}

TEST_CASE("noncomp-incomplete is transitive on the 3^3 grid") {
    const auto oracle = make_noncomparable_incomplete();
    const Grid g(3, 2, 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (!weakly_prefers(oracle.compare(g.point(i), g.point(j)))) continue;
            for (std::size_t k = 0; k < g.size(); ++k) {
                if (weakly_prefers(oracle.compare(g.point(j), g.point(k)))) {
                    CHECK(weakly_prefers(oracle.compare(g.point(i), g.point(k))));
                }
            }
        }
    }
}

TEST_CASE("every zoo oracle is reflexive-indifferent and deterministic") {
    std::mt19937_64 rng(3);
    const std::vector<PreferenceOracle> zoo = {
        make_lexicographic({2, 0, 1}), make_leximax(3),   make_dominant(3, 1),
        make_perfect_substitutes(3),   make_min_multiplicative(), make_cobb_douglas(0.5),
        make_pairwise_lex_ex2(),       make_ex0(),        make_ex01(),
        make_lex_semiorder(1.0),       make_noncomparable_indifferent(),
        make_noncomparable_incomplete()};
    for (const auto& oracle : zoo) {
        const std::size_t n = oracle.dimension();
        for (int k = 0; k < 50; ++k) {
            std::vector<double> coords(n);
            for (auto& c : coords) c = static_cast<double>(rng() % 9) * 0.5;
            const Alternative x(coords);
            CHECK(oracle.compare(x, x) == CO::Indifferent);
        }
        const Grid g(n, 2, 1);
        for (int k = 0; k < 30; ++k) {
            const auto& x = g.point(rng() % g.size());
            const auto& y = g.point(rng() % g.size());
            CHECK(oracle.compare(x, y) == oracle.compare(x, y));
        }
    }
}

TEST_CASE("declared completeness matches observed behaviour") {
    const Grid g(3, 3, 1);
    for (const auto& entry : zoo_catalog()) {
        const auto oracle = parse_oracle_spec(entry.example);
        if (!oracle.declared_complete()) continue;
        const Grid go = oracle.dimension() == 3 ? g : Grid(oracle.dimension(), 3, 1);
        for (std::size_t i = 0; i < go.size(); ++i) {
            for (std::size_t j = 0; j < go.size(); ++j) {
                CHECK(oracle.compare(go.point(i), go.point(j)) != CO::Incomparable);
            }
        }
    }
}

TEST_CASE("oracles are safe to query concurrently") {
    const auto oracle = make_pairwise_lex_ex2();
    const Grid g(3, 4, 1);
    std::vector<CO> expected(g.size() * g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            expected[i * g.size() + j] = oracle.compare(g.point(i), g.point(j));
        }
    }
    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < g.size(); i += 4) {
                for (std::size_t j = 0; j < g.size(); ++j) {
                    if (oracle.compare(g.point(i), g.point(j)) != expected[i * g.size() + j]) {
                        ++mismatches;
                    }
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}

TEST_CASE("oracle spec strings round-trip") {
    for (const char* spec : {"lex:1,2,3", "lex:2,1", "leximax:3", "dominant:1", "perfsub:3",
                             "minmul", "cobb:0.5", "ex2", "ex0", "ex01", "semiorder:eps=1",
                             "noncomp-indiff", "noncomp-incomplete"}) {
        CHECK(parse_oracle_spec(spec).name() == spec);
    }
    CHECK(parse_oracle_spec("semiorder:eps=1,order=2,1").name() == "semiorder:eps=1,order=2,1");
    CHECK_THROWS_AS(parse_oracle_spec("nope"), SpecError);
    CHECK_THROWS_AS(parse_oracle_spec("lex:"), SpecError);
    CHECK_THROWS_AS(parse_oracle_spec("lex:1,3"), SpecError);
    CHECK_THROWS_AS(parse_oracle_spec("dominant:9"), SpecError);
    CHECK_THROWS_AS(parse_oracle_spec("semiorder:eps=-1"), SpecError);
    CHECK_THROWS_AS(parse_oracle_spec("cobb:2"), SpecError);
}

TEST_CASE("zoo catalog lists every kind") {
    const auto catalog = zoo_catalog();
    CHECK(catalog.size() == 12);
    for (const auto& entry : catalog) {
        CHECK_NOTHROW(parse_oracle_spec(entry.example));
    }
}
