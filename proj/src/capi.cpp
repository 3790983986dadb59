#include "lexpref.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lexpref/axioms.hpp"
#include "lexpref/choicedata.hpp"
#include "lexpref/classify.hpp"
#include "lexpref/demo.hpp"
#include "lexpref/json_io.hpp"
#include "lexpref/zoo.hpp"

struct lexpref_oracle {
    lexpref::PreferenceOracle impl;
};

namespace {

thread_local std::string g_last_error;

lexpref_status fail(lexpref_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Maps the C++ error hierarchy onto the flat status codes.
template <typename Fn>
lexpref_status guarded(Fn&& fn) {
    using namespace lexpref;
    try {
        fn();
        return LEXPREF_OK;
    } catch (const IncompleteOracleError& e) {
        return fail(LEXPREF_ERR_INCOMPLETE, e.what());
    } catch (const MonotonicityPrereqError& e) {
        return fail(LEXPREF_ERR_PRECONDITION, e.what());
    } catch (const CycleError& e) {
        return fail(LEXPREF_ERR_PRECONDITION, e.what());
    } catch (const IncompleteRelationError& e) {
        return fail(LEXPREF_ERR_PRECONDITION, e.what());
    } catch (const LinkFailureError& e) {
        return fail(LEXPREF_ERR_PRECONDITION, e.what());
    } catch (const ParseError& e) {
        return fail(LEXPREF_ERR_PARSE, e.what());
    } catch (const SchemaMismatchError& e) {
        return fail(LEXPREF_ERR_PARSE, e.what());
    } catch (const Error& e) {
        return fail(LEXPREF_ERR_INVALID_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(LEXPREF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LEXPREF_ERR_INTERNAL, "unknown error");
    }
}

lexpref::Grid default_grid(std::size_t n) {
    return n <= 3 ? lexpref::Grid(n, 8.0, 1.0) : lexpref::Grid(n, 4.0, 1.0);
}

lexpref::Grid resolve_grid(const lexpref_oracle* oracle, const char* grid_spec) {
    if (!grid_spec || !*grid_spec) return default_grid(oracle->impl.dimension());
    lexpref::Grid g = lexpref::Grid::parse(grid_spec);
    if (g.dimension() != oracle->impl.dimension()) {
        throw lexpref::BadGridSpec("grid dimension " + std::to_string(g.dimension()) +
                                   " does not match oracle dimension " +
                                   std::to_string(oracle->impl.dimension()));
    }
    return g;
}

lexpref::EpsSchedule resolve_eps(const char* eps_spec, double step) {
    if (!eps_spec || !*eps_spec) return lexpref::EpsSchedule::defaults(step);
    return lexpref::EpsSchedule::parse(eps_spec, step);
}

lexpref::AxiomVerdict run_check(const lexpref::PreferenceOracle& oracle, const std::string& axiom,
                                const lexpref::Grid& g, const lexpref::EpsSchedule& sched) {
    using namespace lexpref;
    if (axiom == "completetrans") return check_complete_transitive(oracle, g);
    if (axiom == "monotone") {
        return aggregate_pair_axiom(
            check_axiom_all_pairs(oracle, g, PairAxiom::StrongMonotonicity, sched),
            "strong_monotonicity");
    }
    if (axiom == "monotone-full") return check_strong_monotonicity(oracle, g);
    if (axiom == "mildcont") {
        return aggregate_pair_axiom(
            check_axiom_all_pairs(oracle, g, PairAxiom::MildContinuity, sched), "mild_continuity");
    }
    if (axiom == "mildcont-full") return check_mild_continuity(oracle, g, sched);
    if (axiom == "imia") {
        return aggregate_pair_axiom(check_axiom_all_pairs(oracle, g, PairAxiom::Imia, sched),
                                    "imia");
    }
    if (axiom == "noncomp2") {
        return aggregate_pair_axiom(
            check_axiom_all_pairs(oracle, g, PairAxiom::Noncompensation, sched),
            "noncompensation_induced");
    }
    if (axiom == "noncompfull") return check_noncompensation_full(oracle, g);
    if (axiom == "nraa") return check_nraa(oracle, g);
    if (axiom == "independence") return check_independence(oracle, g);
    throw SpecError("unknown axiom '" + axiom +
                    "' (expected monotone, mildcont, imia, noncomp2, noncompfull, nraa, "
                    "independence or completetrans)");
}

}  // namespace

extern "C" {

const char* lexpref_last_error(void) { return g_last_error.c_str(); }

void lexpref_string_free(char* s) { std::free(s); }

lexpref_status lexpref_oracle_create(const char* spec, lexpref_oracle** out) {
    if (!spec || !out) return fail(LEXPREF_ERR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto oracle = lexpref::parse_oracle_spec(spec);
        *out = new lexpref_oracle{std::move(oracle)};
    });
}

void lexpref_oracle_destroy(lexpref_oracle* oracle) { delete oracle; }

size_t lexpref_oracle_dimension(const lexpref_oracle* oracle) {
    return oracle ? oracle->impl.dimension() : 0;
}

const char* lexpref_oracle_name(const lexpref_oracle* oracle) {
    return oracle ? oracle->impl.name().c_str() : "";
}

lexpref_status lexpref_oracle_compare(const lexpref_oracle* oracle, const double* x,
                                      const double* y, size_t n, lexpref_outcome* out) {
    if (!oracle || !x || !y || !out) return fail(LEXPREF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const lexpref::Alternative ax(std::vector<double>(x, x + n));
        const lexpref::Alternative ay(std::vector<double>(y, y + n));
        switch (oracle->impl.compare(ax, ay)) {
            case lexpref::ComparisonOutcome::FirstStrict: *out = LEXPREF_FIRST_STRICT; break;
            case lexpref::ComparisonOutcome::SecondStrict: *out = LEXPREF_SECOND_STRICT; break;
            case lexpref::ComparisonOutcome::Indifferent: *out = LEXPREF_INDIFFERENT; break;
            case lexpref::ComparisonOutcome::Incomparable: *out = LEXPREF_INCOMPARABLE; break;
        }
    });
}

lexpref_status lexpref_oracle_induce(const lexpref_oracle* oracle, const size_t* attrs,
                                     size_t count, lexpref_oracle** out) {
    if (!oracle || !attrs || !out) return fail(LEXPREF_ERR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto subset =
            lexpref::AttributeSubset::from_one_based(std::vector<std::size_t>(attrs, attrs + count));
        *out = new lexpref_oracle{lexpref::induce(oracle->impl, subset)};
    });
}

lexpref_status lexpref_check(const lexpref_oracle* oracle, const char* axiom,
                             const char* grid_spec, const char* eps_spec, uint64_t seed,
                             int* violated, char** json_out) {
    if (!oracle || !axiom) return fail(LEXPREF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const lexpref::Grid g = resolve_grid(oracle, grid_spec);
        const lexpref::EpsSchedule sched = resolve_eps(eps_spec, g.step());
        lexpref::AxiomVerdict v = run_check(oracle->impl, axiom, g, sched);
        v.seed = seed;
        if (violated) *violated = v.satisfied() ? 0 : 1;
        if (json_out) *json_out = dup_string(lexpref::to_json(v).dump());
    });
}

lexpref_status lexpref_classify(const lexpref_oracle* oracle, const char* grid_spec,
                                const char* eps_spec, const char* mode, uint64_t seed,
                                int* class_out, char** json_out) {
    if (!oracle) return fail(LEXPREF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const lexpref::Grid g = resolve_grid(oracle, grid_spec);
        const lexpref::EpsSchedule sched = resolve_eps(eps_spec, g.step());
        lexpref::ClassifyMode m = lexpref::ClassifyMode::Imia;
        if (mode && *mode) {
            const std::string ms = mode;
            if (ms == "imia") {
                m = lexpref::ClassifyMode::Imia;
            } else if (ms == "nc3a") {
                m = lexpref::ClassifyMode::Noncompensation3A;
            } else {
                throw lexpref::SpecError("unknown mode '" + ms + "' (expected imia or nc3a)");
            }
        }
        const lexpref::ClassificationReport r =
            lexpref::classify_lexicographic(oracle->impl, g, sched, m, seed);
        if (class_out) {
            switch (r.cls) {
                case lexpref::PrefClass::Lexicographic: *class_out = LEXPREF_CLASS_LEXICOGRAPHIC; break;
                case lexpref::PrefClass::PairwiseLexicographicOnly:
                    *class_out = LEXPREF_CLASS_PAIRWISE_ONLY;
                    break;
                case lexpref::PrefClass::Dominant: *class_out = LEXPREF_CLASS_DOMINANT; break;
                case lexpref::PrefClass::Unclassified: *class_out = LEXPREF_CLASS_UNCLASSIFIED; break;
            }
        }
        if (json_out) *json_out = dup_string(lexpref::to_json(r).dump());
    });
}

lexpref_status lexpref_audit_file(const char* csv_path, const char* schema_path, char** json_out) {
    if (!csv_path) return fail(LEXPREF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        lexpref::SchemaMap orientations;
        if (schema_path && *schema_path) orientations = lexpref::load_schema_file(schema_path);
        const lexpref::ChoiceDataset data = lexpref::load_choices(csv_path, orientations);
        const lexpref::AuditReport report = lexpref::audit(data);
        if (json_out) *json_out = dup_string(lexpref::to_json(report).dump());
    });
}

lexpref_status lexpref_demo(const char* name, char** json_out) {
    if (!name) return fail(LEXPREF_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const lexpref::json j = lexpref::run_demo(name);
        if (json_out) *json_out = dup_string(j.dump());
    });
}

lexpref_status lexpref_zoo_list(char** json_out) {
    return guarded([&] {
        if (json_out) *json_out = dup_string(lexpref::zoo_list_json().dump());
    });
}

}  // extern "C"
