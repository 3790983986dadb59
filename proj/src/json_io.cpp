#include "lexpref/json_io.hpp"

#include <cstdio>

#include "lexpref/zoo.hpp"

namespace lexpref {

json to_json(const Alternative& a) {
    json arr = json::array();
    for (double c : a.coords()) arr.push_back(c);
    return arr;
}

json to_json(const Witness& w) {
    json points = json::array();
    for (const auto& lp : w.points) {
        points.push_back(json{{"name", lp.label}, {"coords", to_json(lp.point)}});
    }
    json comparisons = json::array();
    for (const auto& rec : w.comparisons) {
        comparisons.push_back(
            json{{"first", rec.first}, {"second", rec.second}, {"outcome", outcome_name(rec.outcome)}});
    }
    return json{{"points", points}, {"comparisons", comparisons}, {"note", w.note}};
}

json to_json(const AxiomVerdict& v) {
    json resolution{{"grid", v.grid_spec},
                    {"eps_schedule", v.eps_spec ? json(*v.eps_spec) : json(nullptr)},
                    {"seed", v.seed}};
    resolution["enumeration"] = v.scan.exhaustive ? "exhaustive" : "sampled";
    if (!v.scan.exhaustive) resolution["samples"] = v.scan.samples;
    resolution["space"] = v.scan.space;
    return json{{"axiom", v.axiom},
                {"status", v.satisfied() ? "satisfied_at_resolution" : "violated"},
                {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
                {"resolution", resolution},
                {"queries", v.queries}};
}

json to_json(const ImportanceRelation& rel) {
    json beats = json::array();
    json unknown = json::array();
    const std::size_t n = rel.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rel.beats(i, j) == Tri::True) {
                beats.push_back(std::to_string(i + 1) + ">*" + std::to_string(j + 1));
            } else if (i < j && rel.beats(i, j) == Tri::Unknown &&
                       rel.beats(j, i) == Tri::Unknown) {
                unknown.push_back(std::to_string(i + 1) + "?" + std::to_string(j + 1));
            }
        }
    }
    return json{{"beats", beats}, {"unknown", unknown}};
}

namespace {

json subset_to_json(const AttributeSubset& s) {
    json arr = json::array();
    for (std::size_t m : s.members()) arr.push_back(m + 1);
    return arr;
}

json order_to_json(const LexOrder& order) {
    json arr = json::array();
    for (std::size_t a : order.order) arr.push_back(a + 1);
    return arr;
}

}  // namespace

json to_json(const ClassificationReport& r) {
    json subsets = json::array();
    for (const auto& sub : r.subsets) {
        json entry{{"subset", subset_to_json(sub.subset)},
                   {"most_important",
                    sub.most_important ? json(*sub.most_important + 1) : json(nullptr)},
                   {"monotone", to_json(sub.monotone)},
                   {"mild_continuity", to_json(sub.mild_continuity)}};
        if (sub.structure) {
            entry["structure"] = to_json(*sub.structure);
        } else {
            entry["structure"] = nullptr;
            entry["structure_error"] = sub.structure_error;
        }
        subsets.push_back(std::move(entry));
    }
    json out{{"oracle", r.oracle_name},
             {"grid", r.grid_spec},
             {"eps_schedule", r.eps_spec},
             {"mode", r.mode},
             {"seed", r.seed},
             {"complete_transitive", to_json(r.complete_transitive)},
             {"pairwise", json{{"subsets", subsets},
                               {"pairwise_lexicographic", r.pairwise_lexicographic}}},
             {"nraa", r.nraa ? to_json(*r.nraa) : json(nullptr)},
             {"importance", r.importance ? to_json(*r.importance) : json(nullptr)},
             {"order", r.order ? order_to_json(*r.order) : json(nullptr)},
             {"class", pref_class_id(r.cls)},
             {"dominant_attribute",
              r.dominant_attribute ? json(*r.dominant_attribute + 1) : json(nullptr)},
             {"agreement",
              r.validation_pairs > 0 ? json(format_fraction6(r.agreement)) : json(nullptr)},
             {"validation_pairs", r.validation_pairs}};
    // The characterizations hold over the reals; a grid run can only certify
    // consistency at its resolution, which the report states explicitly.
    out["note"] = "consistent with the reported class at resolution (" + r.grid_spec + ", " +
                  r.eps_spec + ")";
    return out;
}

json to_json(const AuditReport& r) {
    json attrs = json::array();
    for (std::size_t k = 0; k < r.schema.dimension(); ++k) {
        attrs.push_back(json{
            {"name", r.schema.names[k]},
            {"orientation",
             r.schema.orientation[k] == Orientation::HigherBetter ? "higher" : "lower"}});
    }
    json respondents = json::array();
    for (const auto& ra : r.respondents) {
        json orders = json::array();
        for (const auto& o : ra.lex_orders) orders.push_back(order_to_json(o));
        respondents.push_back(
            json{{"id", ra.id},
                 {"classification", respondent_label_id(ra.label)},
                 {"lex_orders", orders},
                 {"dominant_attribute",
                  ra.dominant_attr ? json(*ra.dominant_attr + 1) : json(nullptr)},
                 {"observations", ra.observations}});
    }
    return json{{"schema", json{{"attributes", attrs}}},
                {"respondents", respondents},
                {"summary", json{{"total", r.respondents.size()},
                                 {"lex_consistent", r.lex_consistent},
                                 {"dominant", r.dominant},
                                 {"inconsistent", r.inconsistent},
                                 {"fraction_lex_consistent",
                                  format_fraction6(r.fraction_lex_consistent)}}}};
}

json zoo_list_json() {
    json oracles = json::array();
    for (const auto& entry : zoo_catalog()) {
        oracles.push_back(json{{"id", entry.id},
                               {"example", entry.example},
                               {"description", entry.description},
                               {"dimension", entry.dimension}});
    }
    return json{{"oracles", oracles}};
}

std::string format_fraction6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string dump_json(const json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace lexpref
