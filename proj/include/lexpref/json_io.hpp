#pragma once

#include <string>

#include <json.hpp>

#include "lexpref/axioms.hpp"
#include "lexpref/choicedata.hpp"
#include "lexpref/classify.hpp"

namespace lexpref {

// All reports serialize to nlohmann ordered JSON with fixed insertion
// order, so identical inputs dump byte-identical text.
using json = nlohmann::ordered_json;

json to_json(const Alternative& a);
json to_json(const Witness& w);
json to_json(const AxiomVerdict& v);
json to_json(const ImportanceRelation& rel);
json to_json(const ClassificationReport& r);
json to_json(const AuditReport& r);
json zoo_list_json();

// Fractions reported with six digits, e.g. "1.000000".
std::string format_fraction6(double v);

// Compact by default; --pretty renders the same object with indentation.
std::string dump_json(const json& j, bool pretty);

}  // namespace lexpref
