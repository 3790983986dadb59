#include <doctest.h>

#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "lexpref.h"

namespace {

struct OracleGuard {
    lexpref_oracle* o = nullptr;
    ~OracleGuard() { lexpref_oracle_destroy(o); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { lexpref_string_free(s); }
};

}  // namespace

TEST_CASE("c api: oracle lifecycle and comparison") {
    OracleGuard oracle;
    REQUIRE(lexpref_oracle_create("lex:1,2,3", &oracle.o) == LEXPREF_OK);
    CHECK(lexpref_oracle_dimension(oracle.o) == 3);
    CHECK(std::strcmp(lexpref_oracle_name(oracle.o), "lex:1,2,3") == 0);

    const double x[3] = {1, 0, 0};
    const double y[3] = {0, 9, 9};
    lexpref_outcome out = LEXPREF_INDIFFERENT;
    REQUIRE(lexpref_oracle_compare(oracle.o, x, y, 3, &out) == LEXPREF_OK);
    CHECK(out == LEXPREF_FIRST_STRICT);
    REQUIRE(lexpref_oracle_compare(oracle.o, y, x, 3, &out) == LEXPREF_OK);
    CHECK(out == LEXPREF_SECOND_STRICT);

    CHECK(lexpref_oracle_compare(oracle.o, x, y, 2, &out) == LEXPREF_ERR_INVALID_ARG);
    CHECK(std::string(lexpref_last_error()).find("dimension") != std::string::npos);
}

TEST_CASE("c api: bad specs report invalid-arg") {
    lexpref_oracle* o = nullptr;
    CHECK(lexpref_oracle_create("not-an-oracle", &o) == LEXPREF_ERR_INVALID_ARG);
    CHECK(o == nullptr);
    CHECK(lexpref_last_error()[0] != '\0');
    CHECK(lexpref_oracle_create(nullptr, &o) == LEXPREF_ERR_INVALID_ARG);
}

TEST_CASE("c api: induced oracles") {
    OracleGuard parent;
    REQUIRE(lexpref_oracle_create("ex2", &parent.o) == LEXPREF_OK);
    const size_t attrs[2] = {2, 3};
    OracleGuard induced;
    REQUIRE(lexpref_oracle_induce(parent.o, attrs, 2, &induced.o) == LEXPREF_OK);
    CHECK(lexpref_oracle_dimension(induced.o) == 2);
    const double a[2] = {6, 1};
    const double b[2] = {4, 8};
    lexpref_outcome out = LEXPREF_INDIFFERENT;
    REQUIRE(lexpref_oracle_compare(induced.o, a, b, 2, &out) == LEXPREF_OK);
    CHECK(out == LEXPREF_FIRST_STRICT);

    const size_t bad[2] = {3, 4};
    lexpref_oracle* nope = nullptr;
    CHECK(lexpref_oracle_induce(parent.o, bad, 2, &nope) == LEXPREF_ERR_INVALID_ARG);
}

TEST_CASE("c api: checks return verdict JSON and the violated flag") {
    OracleGuard oracle;
    REQUIRE(lexpref_oracle_create("ex2", &oracle.o) == LEXPREF_OK);
    int violated = -1;
    StringGuard json;
    REQUIRE(lexpref_check(oracle.o, "nraa", "3:8:1", nullptr, 0, &violated, &json.s) == LEXPREF_OK);
    CHECK(violated == 1);
    const auto j = nlohmann::ordered_json::parse(json.s);
    CHECK(j["axiom"] == "nraa");
    CHECK(j["status"] == "violated");
    CHECK(j["witness"].is_object());

    StringGuard json2;
    REQUIRE(lexpref_check(oracle.o, "independence", "3:8:1", nullptr, 0, &violated, &json2.s) ==
            LEXPREF_OK);
    CHECK(violated == 0);

    // Null grid spec falls back to the n:8:1 default.
    REQUIRE(lexpref_check(oracle.o, "nraa", nullptr, nullptr, 0, &violated, nullptr) == LEXPREF_OK);
    CHECK(violated == 1);

    CHECK(lexpref_check(oracle.o, "no-such-axiom", nullptr, nullptr, 0, &violated, nullptr) ==
          LEXPREF_ERR_INVALID_ARG);
    CHECK(lexpref_check(oracle.o, "nraa", "2:8:1", nullptr, 0, &violated, nullptr) ==
          LEXPREF_ERR_INVALID_ARG);  // grid dimension mismatch
}

TEST_CASE("c api: incomplete oracles are flagged") {
    OracleGuard oracle;
    REQUIRE(lexpref_oracle_create("noncomp-incomplete", &oracle.o) == LEXPREF_OK);
    int violated = -1;
    // Completeness failures are a verdict, not an error.
    REQUIRE(lexpref_check(oracle.o, "completetrans", "3:2:1", nullptr, 0, &violated, nullptr) ==
            LEXPREF_OK);
    CHECK(violated == 1);
    // Checks that need a complete preference refuse instead.
    CHECK(lexpref_check(oracle.o, "imia", "3:2:1", nullptr, 0, &violated, nullptr) ==
          LEXPREF_ERR_INCOMPLETE);
}

TEST_CASE("c api: classification") {
    OracleGuard oracle;
    REQUIRE(lexpref_oracle_create("lex:2,1,3", &oracle.o) == LEXPREF_OK);
    int cls = -1;
    StringGuard json;
    REQUIRE(lexpref_classify(oracle.o, "3:4:1", nullptr, "imia", 0, &cls, &json.s) == LEXPREF_OK);
    CHECK(cls == LEXPREF_CLASS_LEXICOGRAPHIC);
    const auto j = nlohmann::ordered_json::parse(json.s);
    CHECK(j["order"] == nlohmann::ordered_json::array({2, 1, 3}));
    CHECK(j["agreement"] == "1.000000");

    OracleGuard dom;
    REQUIRE(lexpref_oracle_create("dominant:1", &dom.o) == LEXPREF_OK);
    REQUIRE(lexpref_classify(dom.o, "3:4:1", nullptr, "nc3a", 0, &cls, nullptr) == LEXPREF_OK);
    CHECK(cls == LEXPREF_CLASS_DOMINANT);

    CHECK(lexpref_classify(oracle.o, nullptr, nullptr, "bogus", 0, &cls, nullptr) ==
          LEXPREF_ERR_INVALID_ARG);
}

TEST_CASE("c api: audit files") {
    const std::string csv_path = "/tmp/lexpref_capi_audit.csv";
    {
        std::ofstream f(csv_path);
        f << "respondent_id,choice_set_id,alternative_id,chosen,attr_1,attr_2\n"
             "r1,cs1,a,1,2,1\n"
             "r1,cs1,b,0,1,9\n";
    }
    StringGuard json;
    REQUIRE(lexpref_audit_file(csv_path.c_str(), nullptr, &json.s) == LEXPREF_OK);
    const auto j = nlohmann::ordered_json::parse(json.s);
    CHECK(j["summary"]["total"] == 1);

    {
        std::ofstream f(csv_path);
        f << "respondent_id,choice_set_id,alternative_id,chosen,attr_1\n"
             "r1,cs1,a,1,-2\n";
    }
    CHECK(lexpref_audit_file(csv_path.c_str(), nullptr, nullptr) == LEXPREF_ERR_PARSE);
    CHECK(lexpref_audit_file("/nonexistent/file.csv", nullptr, nullptr) == LEXPREF_ERR_PARSE);
}

TEST_CASE("c api: demos and the zoo list") {
    StringGuard json;
    REQUIRE(lexpref_demo("table1", &json.s) == LEXPREF_OK);
    const auto j = nlohmann::ordered_json::parse(json.s);
    CHECK(j["rows"].size() == 3);
    CHECK(lexpref_demo("nope", nullptr) == LEXPREF_ERR_INVALID_ARG);

    StringGuard zoo;
    REQUIRE(lexpref_zoo_list(&zoo.s) == LEXPREF_OK);
    CHECK(nlohmann::ordered_json::parse(zoo.s)["oracles"].size() == 12);
}
