// Command-line front end. All functionality goes through the C API of the
// shared library; this file only parses flags, routes output and maps
// verdicts onto exit codes:
//   check:    0 satisfied, 1 violated, 2 error
//   classify: 0 lexicographic, 3 pairwise-only, 4 dominant, 5 unclassified
//   audit/demo/zoo: 0 success, 2 error

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexpref.h"

namespace {

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { lexpref_string_free(s); }
};

struct OracleGuard {
    lexpref_oracle* o = nullptr;
    ~OracleGuard() { lexpref_oracle_destroy(o); }
};

int emit(const char* compact_json, const std::string& out_path, bool pretty) {
    std::string text = compact_json ? compact_json : "";
    if (pretty) {
        text = nlohmann::ordered_json::parse(text).dump(2);
    }
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: could not open output file '" << out_path << "'\n";
            return 2;
        }
        f << text << "\n";
    }
    return 0;
}

int report_error(lexpref_status status) {
    std::cerr << "error: " << lexpref_last_error() << "\n";
    (void)status;
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexpref: axiom checks, classification and choice-data audits for "
                 "multi-attribute preference oracles"};
    app.require_subcommand(1);

    std::string oracle_spec, grid_spec, eps_spec, axiom, mode = "imia", out_path;
    std::string data_path, schema_path, demo_name;
    std::uint64_t seed = 0;
    bool pretty = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the JSON report to this file");
        cmd->add_flag("--pretty", pretty, "indent the JSON output");
        cmd->add_option("--seed", seed, "seed recorded in reports (default 0)");
    };

    CLI::App* check = app.add_subcommand("check", "run one axiom check against an oracle");
    check->add_option("--oracle", oracle_spec, "oracle spec, e.g. lex:1,2,3 (see `zoo list`)")
        ->required();
    check
        ->add_option("--axiom", axiom,
                     "monotone|mildcont|imia|noncomp2|noncompfull|nraa|independence|completetrans")
        ->required();
    check->add_option("--grid", grid_spec, "grid spec n:max:h (default n:8:1 for n<=3)");
    check->add_option("--eps", eps_spec, "eps schedule eps0:factor:floor (default 2:0.5:h)");
    add_common(check);

    CLI::App* classify = app.add_subcommand("classify", "full classification pipeline");
    classify->add_option("--oracle", oracle_spec, "oracle spec")->required();
    classify->add_option("--grid", grid_spec, "grid spec n:max:h");
    classify->add_option("--eps", eps_spec, "eps schedule eps0:factor:floor");
    classify->add_option("--mode", mode, "structure requirement: imia (default) or nc3a (induced noncompensation)");
    add_common(classify);

    CLI::App* audit = app.add_subcommand("audit", "audit a discrete-choice dataset");
    audit->add_option("--data", data_path, "choice data CSV")->required();
    audit->add_option("--schema", schema_path, "attribute orientation file (name=higher|lower)");
    add_common(audit);

    CLI::App* demo = app.add_subcommand("demo", "canned demonstrations");
    demo->add_option("name", demo_name, "semiorder-cycle | table1 | robustness")->required();
    add_common(demo);

    CLI::App* zoo = app.add_subcommand("zoo", "built-in oracle catalog");
    CLI::App* zoo_list = zoo->add_subcommand("list", "list the built-in oracles");
    add_common(zoo_list);
    zoo->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (check->parsed() || classify->parsed()) {
        OracleGuard oracle;
        lexpref_status st = lexpref_oracle_create(oracle_spec.c_str(), &oracle.o);
        if (st != LEXPREF_OK) return report_error(st);
        StringGuard json;
        if (check->parsed()) {
            int violated = 0;
            st = lexpref_check(oracle.o, axiom.c_str(),
                               grid_spec.empty() ? nullptr : grid_spec.c_str(),
                               eps_spec.empty() ? nullptr : eps_spec.c_str(), seed, &violated,
                               &json.s);
            if (st != LEXPREF_OK) return report_error(st);
            const int rc = emit(json.s, out_path, pretty);
            return rc != 0 ? rc : (violated ? 1 : 0);
        }
        int cls = LEXPREF_CLASS_UNCLASSIFIED;
        st = lexpref_classify(oracle.o, grid_spec.empty() ? nullptr : grid_spec.c_str(),
                              eps_spec.empty() ? nullptr : eps_spec.c_str(), mode.c_str(), seed,
                              &cls, &json.s);
        if (st != LEXPREF_OK) return report_error(st);
        const int rc = emit(json.s, out_path, pretty);
        return rc != 0 ? rc : cls;
    }

    if (audit->parsed()) {
        StringGuard json;
        const lexpref_status st = lexpref_audit_file(
            data_path.c_str(), schema_path.empty() ? nullptr : schema_path.c_str(), &json.s);
        if (st != LEXPREF_OK) return report_error(st);
        return emit(json.s, out_path, pretty);
    }

    if (demo->parsed()) {
        StringGuard json;
        const lexpref_status st = lexpref_demo(demo_name.c_str(), &json.s);
        if (st != LEXPREF_OK) return report_error(st);
        return emit(json.s, out_path, pretty);
    }

    if (zoo->parsed()) {
        StringGuard json;
        const lexpref_status st = lexpref_zoo_list(&json.s);
        if (st != LEXPREF_OK) return report_error(st);
        return emit(json.s, out_path, pretty);
    }

    return 2;
}
