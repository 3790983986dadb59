#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexpref/classify.hpp"
#include "lexpref/core.hpp"

namespace lexpref {

enum class Orientation { HigherBetter, LowerBetter };

struct AttributeSchema {
    std::vector<std::string> names;
    std::vector<Orientation> orientation;

    std::size_t dimension() const { return names.size(); }
};

struct ChoiceObservation {
    std::string choice_set_id;
    std::vector<Alternative> choice_set;  // at least 2 alternatives
    std::size_t chosen;                   // index into choice_set
};

struct RespondentRecord {
    std::string id;
    std::vector<ChoiceObservation> observations;
};

struct ChoiceDataset {
    AttributeSchema schema;
    std::vector<RespondentRecord> respondents;  // sorted by id
};

// Orientation file: one `name=higher` or `name=lower` line per attribute,
// `#` comments and blank lines allowed. Names must match CSV header columns.
using SchemaMap = std::map<std::string, Orientation>;
SchemaMap load_schema_file(const std::string& path);

// CSV contract (header required):
//   respondent_id, choice_set_id, alternative_id, chosen, attr_1, ..., attr_n
// `chosen` is 0 or 1 with exactly one 1 per choice set; attribute values are
// non-negative decimals. Lower-is-better attributes are reflected within the
// dataset (value -> column max - value) so everything stays in the
// non-negative orthant with higher-is-better semantics.
ChoiceDataset load_choices(const std::string& csv_path, const SchemaMap& orientations);
ChoiceDataset load_choices_text(const std::string& csv_text, const SchemaMap& orientations);

// All importance orders under which every observation's chosen alternative
// is the unique lexicographic maximum of its choice set. Choice sets whose
// lexicographic maximum is duplicated do not discriminate and are skipped
// for that order. Refuses dimensions above 8 (exhaustive search).
std::vector<LexOrder> lex_consistency_orders(const RespondentRecord& record);

// The attribute the respondent maximizes strictly in every observation, if
// one exists (the smallest such attribute, 0-based).
std::optional<std::size_t> detect_dominant_behavior(const RespondentRecord& record);

enum class RespondentLabel { LexConsistent, Dominant, Inconsistent };

const char* respondent_label_id(RespondentLabel label);

struct RespondentAudit {
    std::string id;
    RespondentLabel label = RespondentLabel::Inconsistent;
    std::vector<LexOrder> lex_orders;            // every consistent order
    std::optional<std::size_t> dominant_attr;    // reported whenever the pattern holds
    std::size_t observations = 0;
};

// Lexicographic consistency first; a respondent with no consistent order
// falls through to the dominant check. When both a lexicographic order and
// the dominant pattern fit, both are reported - the data cannot separate
// them and the audit does not guess.
RespondentAudit classify_respondent(const RespondentRecord& record);

struct AuditReport {
    AttributeSchema schema;
    std::vector<RespondentAudit> respondents;
    std::size_t lex_consistent = 0;
    std::size_t dominant = 0;
    std::size_t inconsistent = 0;
    double fraction_lex_consistent = 0.0;
};

AuditReport audit(const ChoiceDataset& dataset);

}  // namespace lexpref
