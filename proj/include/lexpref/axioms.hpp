#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexpref/core.hpp"
#include "lexpref/grid.hpp"

namespace lexpref {

enum class VerdictStatus { SatisfiedAtResolution, Violated };

struct LabeledPoint {
    std::string label;
    Alternative point;
};

struct ComparisonRecord {
    std::string first;   // label of the first point
    std::string second;  // label of the second point
    ComparisonOutcome outcome;
};

// Concrete evidence for a violation: named points, the comparisons that
// conflict, and a note naming the violated clause. Replaying the
// comparisons against the (deterministic) oracle reproduces the recorded
// outcomes exactly.
struct Witness {
    std::vector<LabeledPoint> points;
    std::vector<ComparisonRecord> comparisons;
    std::string note;

    const Alternative* find(const std::string& label) const;
};

bool replay_witness(const PreferenceOracle& oracle, const Witness& w);

// Epsilon schedule for the mild-continuity search: eps0, eps0*factor, ...
// down to the floor, which is never below the grid step. The floor is
// where the checker probes just-off-grid perturbations; a strict-preference
// reversal there is what counts as a violation at resolution.
struct EpsSchedule {
    double eps0;
    double factor;  // in (0,1)
    double floor;

    std::vector<double> values() const;
    std::string spec_string() const;

    // "eps0:factor:floor"; the floor token may be "h" for the grid step.
    static EpsSchedule parse(const std::string& spec, double grid_step);
    static EpsSchedule defaults(double grid_step) { return EpsSchedule{2.0, 0.5, grid_step}; }

    void validate(double grid_step) const;
};

// Enumeration coverage of a scan. Quantifier scans here are exhaustive at
// grid resolution (quadruple checks go through an exact sign-pattern
// grouping rather than raw enumeration), so `space` records the size of the
// quantified space the scan is equivalent to.
struct ScanInfo {
    bool exhaustive = true;
    std::uint64_t samples = 0;  // 0 when exhaustive
    std::uint64_t space = 0;
};

struct AxiomVerdict {
    std::string axiom;
    VerdictStatus status = VerdictStatus::SatisfiedAtResolution;
    std::optional<Witness> witness;
    std::string grid_spec;
    std::optional<std::string> eps_spec;
    std::uint64_t seed = 0;
    ScanInfo scan;
    std::uint64_t queries = 0;

    bool satisfied() const { return status == VerdictStatus::SatisfiedAtResolution; }
};

// Completeness (no Incomparable pair) and transitivity (no triple with
// x >= y >= z but not x >= z, in the weak-preference sense) over the whole
// grid. Transitivity is checked exhaustively via bitset rows.
AxiomVerdict check_complete_transitive(const PreferenceOracle& oracle, const Grid& g);

// Verdict form of the unhappy-set scan: satisfied when every outside grid
// point strictly beats every inside point, violated with the offending
// (outside, inside) pair otherwise.
AxiomVerdict check_unhappy_set(const PreferenceOracle& oracle, const GridSet& a);

// x >= y and x != y must be strictly preferred, over all grid pairs.
AxiomVerdict check_strong_monotonicity(const PreferenceOracle& oracle, const Grid& g);

// Weak monotonicity (x > y in every coordinate implies strict preference);
// the prerequisite of the IMIA checker.
AxiomVerdict check_monotonicity(const PreferenceOracle& oracle, const Grid& g);

// Mild continuity at resolution: for every totally different grid pair with
// x strictly preferred to y, strict preference must survive perturbing both
// points by floor/64 in every lattice direction (the off-grid stand-in for
// "some epsilon works"). The schedule is recorded with the verdict; larger
// scheduled radii are implied by the floor probe because balls nest.
AxiomVerdict check_mild_continuity(const PreferenceOracle& oracle, const Grid& g,
                                   const EpsSchedule& sched);

// The per-pair primitive behind check_mild_continuity; nullopt when the
// pair's strict preference survives all floor probes.
std::optional<Witness> mild_continuity_pair_violation(const PreferenceOracle& oracle,
                                                      const Alternative& x, const Alternative& y,
                                                      const EpsSchedule& sched);

// IMIA over the candidate closed unhappy sets of a 2-attribute preference:
// the grid closures of lower contour sets anchored at strictly positive
// grid points (closures of lower contours are the canonical closed unhappy
// sets). Candidates that fail the unhappy-set scan are skipped. Throws
// MonotonicityPrereqError when the preference is not monotone; an
// all-indifferent preference is accepted (its only unhappy sets are trivial
// and IMIA holds vacuously).
AxiomVerdict check_imia(const PreferenceOracle& oracle2d, const Grid& g2);

// IMIA violation inside the closure of the lower contour of one anchor;
// nullopt when that candidate satisfies IMIA (or is not an unhappy set).
std::optional<Witness> imia_candidate_violation(const PreferenceOracle& oracle2d, const Grid& g2,
                                                const Alternative& anchor);

// Fishburn's noncompensation axiom on the given grid: quadruples with equal
// sign patterns must order the same way. Exhaustive via sign-pattern
// grouping (equivalent to the full quadruple scan).
AxiomVerdict check_noncompensation(const PreferenceOracle& oracle2d, const Grid& g2);
AxiomVerdict check_noncompensation_full(const PreferenceOracle& oracle, const Grid& g);

// Verifies one concrete quadruple; nullopt when it is consistent.
std::optional<Witness> noncompensation_instance_violation(const PreferenceOracle& oracle,
                                                          const Alternative& x,
                                                          const Alternative& y,
                                                          const Alternative& z,
                                                          const Alternative& w);

// Nonreversibility under additional attributes: strict preference between
// points supported on a 2-subset (zeros elsewhere) must survive adding any
// equal grid fill on the remaining attributes.
AxiomVerdict check_nraa(const PreferenceOracle& oracle, const Grid& g);

std::optional<Witness> nraa_instance_violation(const PreferenceOracle& oracle,
                                               const AttributeSubset& s, const Alternative& x_s,
                                               const Alternative& y_s, const Alternative& fill);

// Fishburn's independence axiom: the strict-preference bit between two
// levels of one attribute must not depend on the common fill of the others.
AxiomVerdict check_independence(const PreferenceOracle& oracle, const Grid& g);

std::optional<Witness> independence_instance_violation(const PreferenceOracle& oracle,
                                                       std::size_t attr, double xi, double yi,
                                                       const Alternative& fill_a,
                                                       const Alternative& fill_b);

// The axiom families of the characterization quantify over all 2-attribute
// induced preferences; these helpers run a 2-attribute checker on every
// 2-subset (for a 2-attribute oracle that is the oracle itself).
enum class PairAxiom { StrongMonotonicity, MildContinuity, Imia, Noncompensation };

const char* pair_axiom_id(PairAxiom a);

struct PairAxiomRun {
    AttributeSubset subset;
    std::optional<AxiomVerdict> verdict;
    std::string error;  // non-empty when the checker refused (e.g. IMIA prerequisite)
};

std::vector<PairAxiomRun> check_axiom_all_pairs(const PreferenceOracle& oracle, const Grid& g,
                                                PairAxiom axiom, const EpsSchedule& sched);

// Folds per-subset runs into one verdict: the first violated subset wins;
// a refused subset raises its error. Used by the CLI axiom commands.
AxiomVerdict aggregate_pair_axiom(const std::vector<PairAxiomRun>& runs, const std::string& axiom_id);

// All two-element subsets of {0,...,n-1} in lexicographic order.
std::vector<AttributeSubset> two_subsets(std::size_t n);

}  // namespace lexpref
