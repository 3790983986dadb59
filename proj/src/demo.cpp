#include "lexpref/demo.hpp"

#include "lexpref/zoo.hpp"

namespace lexpref {

namespace {

json demo_semiorder_cycle() {
    const PreferenceOracle oracle = make_lex_semiorder(1.0);
    const Alternative a{1.0, 3.0};
    const Alternative b{1.5, 2.0};
    const Alternative c{2.5, 1.0};
    json links = json::array();
    bool verified = true;
    const std::pair<const char*, const char*> edges[3] = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
    const Alternative* pts[3] = {&a, &b, &c};
    for (std::size_t k = 0; k < 3; ++k) {
        const Alternative& first = *pts[k];
        const Alternative& second = *pts[(k + 1) % 3];
        const ComparisonOutcome o = oracle.compare(first, second);
        if (o != ComparisonOutcome::FirstStrict) verified = false;
        links.push_back(json{{"first", edges[k].first},
                             {"second", edges[k].second},
                             {"outcome", outcome_name(o)}});
    }
    // The cycle points live on the half-step grid; the transitivity checker
    // finds a replayable witness there.
    const Grid g(2, 4.0, 0.5);
    const AxiomVerdict ct = check_complete_transitive(oracle, g);
    return json{{"demo", "semiorder-cycle"},
                {"oracle", oracle.name()},
                {"points", json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}},
                {"links", links},
                {"cycle_verified", verified},
                {"complete_transitive", to_json(ct)}};
}

json demo_table1() {
    const Grid g(3, 8.0, 1.0);
    const EpsSchedule sched = EpsSchedule::defaults(g.step());
    json rows = json::array();
    for (const char* spec : {"lex:1,2,3", "ex2", "leximax:3"}) {
        const PreferenceOracle oracle = parse_oracle_spec(spec);
        const AxiomVerdict full = check_noncompensation_full(oracle, g);
        const AxiomVerdict induced = aggregate_pair_axiom(
            check_axiom_all_pairs(oracle, g, PairAxiom::Noncompensation, sched),
            "noncompensation_induced");
        const AxiomVerdict imia =
            aggregate_pair_axiom(check_axiom_all_pairs(oracle, g, PairAxiom::Imia, sched), "imia");
        rows.push_back(json{{"oracle", oracle.name()},
                            {"fishburn_noncompensation", full.satisfied()},
                            {"induced_noncompensation", induced.satisfied()},
                            {"imia", imia.satisfied()}});
    }
    return json{{"demo", "table1"}, {"grid", g.spec_string()}, {"rows", rows}};
}

json demo_robustness() {
    const Grid g(3, 8.0, 1.0);
    const EpsSchedule sched = EpsSchedule::defaults(g.step());
    json rows = json::array();
    for (const char* spec : {"ex2", "dominant:1", "perfsub:3", "leximax:3"}) {
        const PreferenceOracle oracle = parse_oracle_spec(spec);
        const AxiomVerdict a1 = aggregate_pair_axiom(
            check_axiom_all_pairs(oracle, g, PairAxiom::StrongMonotonicity, sched),
            "strong_monotonicity");
        const AxiomVerdict a2 = aggregate_pair_axiom(
            check_axiom_all_pairs(oracle, g, PairAxiom::MildContinuity, sched), "mild_continuity");
        const AxiomVerdict a3 =
            aggregate_pair_axiom(check_axiom_all_pairs(oracle, g, PairAxiom::Imia, sched), "imia");
        const AxiomVerdict a4 = check_nraa(oracle, g);
        rows.push_back(json{{"oracle", oracle.name()},
                            {"strong_monotonicity", a1.satisfied()},
                            {"mild_continuity", a2.satisfied()},
                            {"imia", a3.satisfied()},
                            {"nraa", a4.satisfied()}});
    }
    return json{{"demo", "robustness"},
                {"grid", g.spec_string()},
                {"eps_schedule", sched.spec_string()},
                {"rows", rows}};
}

}  // namespace

json run_demo(const std::string& name) {
    if (name == "semiorder-cycle") return demo_semiorder_cycle();
    if (name == "table1") return demo_table1();
    if (name == "robustness") return demo_robustness();
    throw SpecError("unknown demo '" + name + "' (expected semiorder-cycle, table1 or robustness)");
}

}  // namespace lexpref
