#include "lexpref/choicedata.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lexpref {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct Row {
    std::size_t line;
    std::string respondent;
    std::string choice_set;
    std::string alternative;
    bool chosen;
    std::vector<double> attrs;
};

double parse_attr(const std::string& tok, std::size_t line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw ParseError("", line);
        if (v < 0.0) {
            throw ParseError("line " + std::to_string(line) +
                                 ": attribute values must be non-negative, got '" + tok + "'",
                             line);
        }
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("line " + std::to_string(line) + ": could not parse attribute value '" +
                             tok + "'",
                         line);
    }
}

}  // namespace

SchemaMap load_schema_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("could not open schema file '" + path + "'");
    SchemaMap out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ParseError("schema line " + std::to_string(line_no) +
                                 ": expected name=higher|lower",
                             line_no);
        }
        const std::string name = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (val == "higher") {
            out[name] = Orientation::HigherBetter;
        } else if (val == "lower") {
            out[name] = Orientation::LowerBetter;
        } else {
            throw ParseError("schema line " + std::to_string(line_no) +
                                 ": orientation must be 'higher' or 'lower', got '" + val + "'",
                             line_no);
        }
    }
    return out;
}

ChoiceDataset load_choices_text(const std::string& csv_text, const SchemaMap& orientations) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file: expected a CSV header", 1);
    const auto header = split_csv_line(line);
    if (header.size() < 5 || header[0] != "respondent_id" || header[1] != "choice_set_id" ||
        header[2] != "alternative_id" || header[3] != "chosen") {
        throw ParseError(
            "line 1: header must be respondent_id, choice_set_id, alternative_id, chosen, "
            "attr_1, ...",
            1);
    }
    const std::size_t n = header.size() - 4;

    AttributeSchema schema;
    for (std::size_t k = 0; k < n; ++k) {
        schema.names.push_back(header[4 + k]);
        schema.orientation.push_back(Orientation::HigherBetter);
    }
    for (const auto& [name, orient] : orientations) {
        const auto it = std::find(schema.names.begin(), schema.names.end(), name);
        if (it == schema.names.end()) {
            throw SchemaMismatchError("schema names attribute '" + name +
                                      "' which is not a CSV column");
        }
        schema.orientation[static_cast<std::size_t>(it - schema.names.begin())] = orient;
    }

    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cols = split_csv_line(line);
        if (cols.size() != header.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(header.size()) + " columns, got " +
                                 std::to_string(cols.size()),
                             line_no);
        }
        Row row;
        row.line = line_no;
        row.respondent = cols[0];
        row.choice_set = cols[1];
        row.alternative = cols[2];
        if (cols[3] == "0") {
            row.chosen = false;
        } else if (cols[3] == "1") {
            row.chosen = true;
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": chosen must be 0 or 1",
                             line_no);
        }
        for (std::size_t k = 0; k < n; ++k) {
            row.attrs.push_back(parse_attr(cols[4 + k], line_no));
        }
        rows.push_back(std::move(row));
    }

    // Reflect lower-is-better columns within the dataset.
    for (std::size_t k = 0; k < n; ++k) {
        if (schema.orientation[k] != Orientation::LowerBetter) continue;
        double mx = 0.0;
        for (const Row& r : rows) mx = std::max(mx, r.attrs[k]);
        for (Row& r : rows) r.attrs[k] = mx - r.attrs[k];
    }

    struct SetBuild {
        std::string id;
        std::vector<Alternative> alts;
        std::optional<std::size_t> chosen;
        std::size_t first_line = 0;
        std::size_t chosen_line = 0;
    };
    struct RespBuild {
        std::string id;
        std::vector<SetBuild> sets;
        std::map<std::string, std::size_t> set_index;
    };
    std::vector<RespBuild> builds;
    std::map<std::string, std::size_t> resp_index;
    for (const Row& r : rows) {
        auto [rit, rnew] = resp_index.try_emplace(r.respondent, builds.size());
        if (rnew) builds.push_back(RespBuild{r.respondent, {}, {}});
        RespBuild& rb = builds[rit->second];
        auto [sit, snew] = rb.set_index.try_emplace(r.choice_set, rb.sets.size());
        if (snew) rb.sets.push_back(SetBuild{r.choice_set, {}, std::nullopt, r.line, 0});
        SetBuild& sb = rb.sets[sit->second];
        if (r.chosen) {
            if (sb.chosen) {
                throw ParseError("line " + std::to_string(r.line) + ": choice set '" +
                                     r.choice_set + "' already has a chosen row (line " +
                                     std::to_string(sb.chosen_line) + ")",
                                 r.line);
            }
            sb.chosen = sb.alts.size();
            sb.chosen_line = r.line;
        }
        sb.alts.push_back(Alternative(r.attrs));
    }

    ChoiceDataset out;
    out.schema = schema;
    for (RespBuild& rb : builds) {
        RespondentRecord rec;
        rec.id = rb.id;
        for (SetBuild& sb : rb.sets) {
            if (!sb.chosen) {
                throw ParseError("line " + std::to_string(sb.first_line) + ": choice set '" +
                                     sb.id + "' has no chosen row",
                                 sb.first_line);
            }
            if (sb.alts.size() < 2) {
                throw ParseError("line " + std::to_string(sb.first_line) + ": choice set '" +
                                     sb.id + "' needs at least 2 alternatives",
                                 sb.first_line);
            }
            rec.observations.push_back(ChoiceObservation{sb.id, std::move(sb.alts), *sb.chosen});
        }
        out.respondents.push_back(std::move(rec));
    }
    std::sort(out.respondents.begin(), out.respondents.end(),
              [](const RespondentRecord& a, const RespondentRecord& b) { return a.id < b.id; });
    return out;
}

ChoiceDataset load_choices(const std::string& csv_path, const SchemaMap& orientations) {
    std::ifstream in(csv_path);
    if (!in) throw ParseError("could not open choice data file '" + csv_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_choices_text(buf.str(), orientations);
}

namespace {

ComparisonOutcome lex_under(const std::vector<std::size_t>& order, const Alternative& a,
                            const Alternative& b) {
    for (std::size_t attr : order) {
        if (a[attr] > b[attr]) return ComparisonOutcome::FirstStrict;
        if (b[attr] > a[attr]) return ComparisonOutcome::SecondStrict;
    }
    return ComparisonOutcome::Indifferent;
}

}  // namespace

std::vector<LexOrder> lex_consistency_orders(const RespondentRecord& record) {
    if (record.observations.empty()) return {};
    const std::size_t n = record.observations.front().choice_set.front().dimension();
    if (n > 8) {
        throw DimensionTooLargeError(
            "lex_consistency: exhaustive order search refuses more than 8 attributes");
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<LexOrder> consistent;
    do {
        bool ok = true;
        for (const ChoiceObservation& obs : record.observations) {
            // Unique lexicographic maximum of the choice set under perm.
            std::size_t best = 0;
            std::size_t ties = 1;
            for (std::size_t a = 1; a < obs.choice_set.size(); ++a) {
                const ComparisonOutcome o =
                    lex_under(perm, obs.choice_set[a], obs.choice_set[best]);
                if (o == ComparisonOutcome::FirstStrict) {
                    best = a;
                    ties = 1;
                } else if (o == ComparisonOutcome::Indifferent) {
                    ++ties;
                }
            }
            const ComparisonOutcome chosen_vs_best =
                lex_under(perm, obs.choice_set[obs.chosen], obs.choice_set[best]);
            if (chosen_vs_best != ComparisonOutcome::Indifferent) {
                ok = false;  // the chosen alternative is not maximal
                break;
            }
            if (ties > 1) continue;  // duplicated maximum: non-discriminating
        }
        if (ok) consistent.push_back(LexOrder{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return consistent;
}

std::optional<std::size_t> detect_dominant_behavior(const RespondentRecord& record) {
    if (record.observations.empty()) return std::nullopt;
    const std::size_t n = record.observations.front().choice_set.front().dimension();
    for (std::size_t attr = 0; attr < n; ++attr) {
        bool fits = true;
        for (const ChoiceObservation& obs : record.observations) {
            const Alternative& chosen = obs.choice_set[obs.chosen];
            for (std::size_t a = 0; a < obs.choice_set.size() && fits; ++a) {
                if (a == obs.chosen) continue;
                if (!(chosen[attr] > obs.choice_set[a][attr])) fits = false;
            }
            if (!fits) break;
        }
        if (fits) return attr;
    }
    return std::nullopt;
}

const char* respondent_label_id(RespondentLabel label) {
    switch (label) {
        case RespondentLabel::LexConsistent: return "lex_consistent";
        case RespondentLabel::Dominant: return "dominant";
        case RespondentLabel::Inconsistent: return "inconsistent";
    }
    return "inconsistent";
}

RespondentAudit classify_respondent(const RespondentRecord& record) {
    RespondentAudit out;
    out.id = record.id;
    out.observations = record.observations.size();
    out.lex_orders = lex_consistency_orders(record);
    out.dominant_attr = detect_dominant_behavior(record);
    if (!out.lex_orders.empty()) {
        out.label = RespondentLabel::LexConsistent;
    } else if (out.dominant_attr) {
        out.label = RespondentLabel::Dominant;
    } else {
        out.label = RespondentLabel::Inconsistent;
    }
    return out;
}

AuditReport audit(const ChoiceDataset& dataset) {
    AuditReport report;
    report.schema = dataset.schema;
    for (const RespondentRecord& rec : dataset.respondents) {
        RespondentAudit ra = classify_respondent(rec);
        switch (ra.label) {
            case RespondentLabel::LexConsistent: ++report.lex_consistent; break;
            case RespondentLabel::Dominant: ++report.dominant; break;
            case RespondentLabel::Inconsistent: ++report.inconsistent; break;
        }
        report.respondents.push_back(std::move(ra));
    }
    const std::size_t total = report.respondents.size();
    report.fraction_lex_consistent =
        total == 0 ? 0.0
                   : static_cast<double>(report.lex_consistent) / static_cast<double>(total);
    return report;
}

}  // namespace lexpref
