#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexpref/axioms.hpp"
#include "lexpref/core.hpp"
#include "lexpref/grid.hpp"

namespace lexpref {

// A full importance order over the attributes, most important first.
// Orientation is fixed to higher-is-better here; orientation flips live in
// the choice-data loader.
struct LexOrder {
    std::vector<std::size_t> order;  // 0-based permutation

    std::string to_string() const;  // "2,1,3" with 1-based attribute numbers
    bool operator==(const LexOrder&) const = default;
};

enum class Tri : std::uint8_t { False, True, Unknown };

// The pairwise importance relation i >* j extracted from probes of the
// 2-attribute induced preferences.
class ImportanceRelation {
public:
    explicit ImportanceRelation(std::size_t n);

    std::size_t dimension() const noexcept { return n_; }
    Tri beats(std::size_t i, std::size_t j) const;
    void set_beats(std::size_t i, std::size_t j);    // records i >* j (and j not >* i)
    void set_unknown(std::size_t i, std::size_t j);  // both directions unknown
    bool has_unknown() const;

private:
    std::size_t n_;
    std::vector<Tri> cells_;
};

// Probes each 2-attribute induced preference at three magnitude pairs
// (step vs max, step vs step, max vs step). A probe pattern that is strict
// for the same side at every magnitude decides the direction; any
// disagreement leaves the entry Unknown rather than voting.
ImportanceRelation extract_importance(const PreferenceOracle& oracle, const Grid& g);

// Orders the attributes by the importance relation (topological sort of a
// transitive tournament). Throws IncompleteRelationError on Unknown entries
// and CycleError with a violating triple when the relation is cyclic.
LexOrder order_attributes(const ImportanceRelation& rel);

enum class ClassifyMode { Imia, Noncompensation3A };
enum class PrefClass { Lexicographic, PairwiseLexicographicOnly, Dominant, Unclassified };

const char* classify_mode_id(ClassifyMode m);
const char* pref_class_id(PrefClass c);

struct SubsetAxiomReport {
    AttributeSubset subset;
    std::optional<std::size_t> most_important;  // 0-based; from the probes (unset when unknown)
    AxiomVerdict monotone;
    AxiomVerdict mild_continuity;
    std::optional<AxiomVerdict> structure;  // IMIA or induced noncompensation, per mode
    std::string structure_error;            // set when the IMIA prerequisite refused

    bool all_satisfied() const;
};

struct ClassificationReport {
    std::string oracle_name;
    std::string grid_spec;
    std::string eps_spec;
    std::string mode;
    std::uint64_t seed = 0;

    AxiomVerdict complete_transitive;
    std::vector<SubsetAxiomReport> subsets;
    bool pairwise_lexicographic = false;
    std::optional<AxiomVerdict> nraa;
    std::optional<ImportanceRelation> importance;
    std::optional<LexOrder> order;
    PrefClass cls = PrefClass::Unclassified;
    std::optional<std::size_t> dominant_attribute;  // 0-based
    double agreement = 0.0;
    std::uint64_t validation_pairs = 0;
};

// Pairwise classification: strong monotonicity, mild continuity and the
// mode-selected structure requirement (IMIA or induced noncompensation) on
// every 2-attribute induced preference. Stops before NRAA and ordering.
ClassificationReport classify_pairwise_lex(const PreferenceOracle& oracle, const Grid& g,
                                           const EpsSchedule& sched,
                                           ClassifyMode mode = ClassifyMode::Imia,
                                           std::uint64_t seed = 0);

// The full pipeline: completeness/transitivity, pairwise axioms, NRAA,
// importance extraction, attribute ordering, and validation of the
// reconstructed lexicographic comparator against the oracle on a grid-pair
// sample. The class is Lexicographic only when every axiom family is
// satisfied at resolution and the agreement is exactly 1.
ClassificationReport classify_lexicographic(const PreferenceOracle& oracle, const Grid& g,
                                            const EpsSchedule& sched,
                                            ClassifyMode mode = ClassifyMode::Imia,
                                            std::uint64_t seed = 0);

// The step-by-step chain of the constructive direction of the
// characterization: from x down to y through points that differ in at most
// two attributes, each link strictly preferred.
struct ChainWitness {
    std::vector<Alternative> points;       // z[0..steps], z[0]=x, z[steps]=y
    std::vector<ComparisonOutcome> links;  // all FirstStrict when the chain verifies
    std::size_t pivot_attr = 0;            // 0-based attribute at order position m
    std::size_t pivot_position = 0;        // m, 1-based position within the order
    std::vector<std::size_t> before;       // attributes at order positions < m
    std::vector<std::size_t> after;        // attributes at order positions > m
};

// Preconditions: x and y agree on every attribute before position m in the
// order, x exceeds y at position m, and steps covers the attributes after m
// (steps >= n - m). Intermediate pivot levels are uniformly spaced. Throws
// LinkFailureError at the first link the oracle refuses - evidence that the
// oracle is not lexicographic in the claimed order.
ChainWitness chain_witness(const PreferenceOracle& oracle, const LexOrder& order,
                           const Alternative& x, const Alternative& y, std::size_t steps);

// Detects a dominant preference: the attribute whose level alone decides
// every grid comparison (strict iff higher, indifferent iff equal).
std::optional<std::size_t> detect_dominant(const PreferenceOracle& oracle, const Grid& g);

}  // namespace lexpref
