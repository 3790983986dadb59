#include "lexpref/classify.hpp"

#include <algorithm>
#include <random>

#include "lexpref/zoo.hpp"

namespace lexpref {

namespace {

using CO = ComparisonOutcome;

}  // namespace

std::string LexOrder::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(order[i] + 1);
    }
    return out;
}

ImportanceRelation::ImportanceRelation(std::size_t n) : n_(n), cells_(n * n, Tri::Unknown) {
    for (std::size_t i = 0; i < n; ++i) cells_[i * n + i] = Tri::False;
}

Tri ImportanceRelation::beats(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
}

void ImportanceRelation::set_beats(std::size_t i, std::size_t j) {
    cells_[i * n_ + j] = Tri::True;
    cells_[j * n_ + i] = Tri::False;
}

void ImportanceRelation::set_unknown(std::size_t i, std::size_t j) {
    cells_[i * n_ + j] = Tri::Unknown;
    cells_[j * n_ + i] = Tri::Unknown;
}

bool ImportanceRelation::has_unknown() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i != j && cells_[i * n_ + j] == Tri::Unknown) return true;
        }
    }
    return false;
}

ImportanceRelation extract_importance(const PreferenceOracle& oracle, const Grid& g) {
    const std::size_t n = oracle.dimension();
    ImportanceRelation rel(n);
    if (n == 1) return rel;
    const double lo = g.step();
    const double hi = g.max();
    const double mags[3][2] = {{lo, hi}, {lo, lo}, {hi, lo}};
    for (const AttributeSubset& s : two_subsets(n)) {
        const PreferenceOracle induced = induce(oracle, s);
        const std::size_t i = s.members()[0];
        const std::size_t j = s.members()[1];
        int firsts = 0, seconds = 0;
        for (const auto& mag : mags) {
            // Probing whether i beats j: levels (a,0) against (0,b) in the
            // induced space, where coordinate 0 carries attribute i.
            const CO o = induced.compare(Alternative{mag[0], 0.0}, Alternative{0.0, mag[1]});
            if (o == CO::FirstStrict) ++firsts;
            if (o == CO::SecondStrict) ++seconds;
        }
        if (firsts == 3) {
            rel.set_beats(i, j);
        } else if (seconds == 3) {
            rel.set_beats(j, i);
        } else {
            rel.set_unknown(i, j);
        }
    }
    return rel;
}

LexOrder order_attributes(const ImportanceRelation& rel) {
    const std::size_t n = rel.dimension();
    if (rel.has_unknown()) {
        throw IncompleteRelationError(
            "order_attributes: the importance relation has unknown entries");
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        std::size_t wa = 0, wb = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (rel.beats(a, k) == Tri::True) ++wa;
            if (rel.beats(b, k) == Tri::True) ++wb;
        }
        return wa > wb;
    });
    // A transitive tournament sorts cleanly by wins; verify, and dig out a
    // 3-cycle when it does not.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rel.beats(order[a], order[b]) == Tri::True) continue;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t k = 0; k < n; ++k) {
                        if (rel.beats(i, j) == Tri::True && rel.beats(j, k) == Tri::True &&
                            rel.beats(k, i) == Tri::True) {
                            throw CycleError("order_attributes: importance cycle " +
                                                 std::to_string(i + 1) + " >* " +
                                                 std::to_string(j + 1) + " >* " +
                                                 std::to_string(k + 1) + " >* " +
                                                 std::to_string(i + 1),
                                             i, j, k);
                        }
                    }
                }
            }
            throw CycleError("order_attributes: importance relation is not transitive", order[a],
                             order[b], order[a]);
        }
    }
    return LexOrder{std::move(order)};
}

const char* classify_mode_id(ClassifyMode m) {
    return m == ClassifyMode::Imia ? "imia" : "nc3a";
}

const char* pref_class_id(PrefClass c) {
    switch (c) {
        case PrefClass::Lexicographic: return "lexicographic";
        case PrefClass::PairwiseLexicographicOnly: return "pairwise_lexicographic_only";
        case PrefClass::Dominant: return "dominant";
        case PrefClass::Unclassified: return "unclassified";
    }
    return "unclassified";
}

bool SubsetAxiomReport::all_satisfied() const {
    return monotone.satisfied() && mild_continuity.satisfied() && structure &&
           structure->satisfied();
}

namespace {

ClassificationReport start_report(const PreferenceOracle& oracle, const Grid& g,
                                  const EpsSchedule& sched, ClassifyMode mode,
                                  std::uint64_t seed) {
    ClassificationReport r;
    r.oracle_name = oracle.name();
    r.grid_spec = g.spec_string();
    r.eps_spec = sched.spec_string();
    r.mode = classify_mode_id(mode);
    r.seed = seed;
    return r;
}

void run_pairwise(ClassificationReport& r, const PreferenceOracle& oracle, const Grid& g,
                  const EpsSchedule& sched, ClassifyMode mode) {
    const Grid g2 = g.with_dimension(2);
    const ImportanceRelation probes = extract_importance(oracle, g);
    bool all_ok = true;
    for (const AttributeSubset& s : two_subsets(oracle.dimension())) {
        const PreferenceOracle induced = induce(oracle, s);
        SubsetAxiomReport sub{s, std::nullopt, {}, {}, std::nullopt, ""};
        const std::size_t i = s.members()[0];
        const std::size_t j = s.members()[1];
        if (probes.beats(i, j) == Tri::True) sub.most_important = i;
        if (probes.beats(j, i) == Tri::True) sub.most_important = j;
        sub.monotone = check_strong_monotonicity(induced, g2);
        sub.mild_continuity = check_mild_continuity(induced, g2, sched);
        try {
            sub.structure = (mode == ClassifyMode::Imia) ? check_imia(induced, g2)
                                                      : check_noncompensation(induced, g2);
        } catch (const MonotonicityPrereqError& e) {
            sub.structure_error = e.what();
        }
        all_ok = all_ok && sub.all_satisfied();
        r.subsets.push_back(std::move(sub));
    }
    r.pairwise_lexicographic = all_ok;
}

void validate_order(ClassificationReport& r, const PreferenceOracle& oracle, const Grid& g,
                    std::uint64_t seed) {
    const PreferenceOracle rebuilt = make_lexicographic(r.order->order);
    const std::size_t n = g.size();
    const std::uint64_t total_pairs = static_cast<std::uint64_t>(n) * n;
    std::uint64_t matches = 0;
    if (total_pairs <= 1'000'000) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (oracle.compare(g.point(i), g.point(j)) ==
                    rebuilt.compare(g.point(i), g.point(j))) {
                    ++matches;
                }
            }
        }
        r.validation_pairs = total_pairs;
    } else {
        // Seeded sample; mt19937_64 with modulo keeps draws identical across
        // platforms.
        std::mt19937_64 rng(seed);
        const std::uint64_t samples = 200'000;
        for (std::uint64_t k = 0; k < samples; ++k) {
            const std::size_t i = static_cast<std::size_t>(rng() % n);
            const std::size_t j = static_cast<std::size_t>(rng() % n);
            if (oracle.compare(g.point(i), g.point(j)) ==
                rebuilt.compare(g.point(i), g.point(j))) {
                ++matches;
            }
        }
        r.validation_pairs = samples;
    }
    r.agreement = static_cast<double>(matches) / static_cast<double>(r.validation_pairs);
}

}  // namespace

ClassificationReport classify_pairwise_lex(const PreferenceOracle& oracle, const Grid& g,
                                           const EpsSchedule& sched, ClassifyMode mode,
                                           std::uint64_t seed) {
    sched.validate(g.step());
    ClassificationReport r = start_report(oracle, g, sched, mode, seed);
    r.complete_transitive = check_complete_transitive(oracle, g);
    if (!r.complete_transitive.satisfied()) return r;
    run_pairwise(r, oracle, g, sched, mode);
    return r;
}

ClassificationReport classify_lexicographic(const PreferenceOracle& oracle, const Grid& g,
                                            const EpsSchedule& sched, ClassifyMode mode,
                                            std::uint64_t seed) {
    sched.validate(g.step());
    ClassificationReport r = start_report(oracle, g, sched, mode, seed);
    r.complete_transitive = check_complete_transitive(oracle, g);
    if (!r.complete_transitive.satisfied()) {
        return r;  // Unclassified; the verdict carries the witness
    }
    run_pairwise(r, oracle, g, sched, mode);
    if (!r.pairwise_lexicographic) {
        bool axiom1_failed = false;
        for (const auto& sub : r.subsets) {
            if (!sub.monotone.satisfied()) axiom1_failed = true;
        }
        if (axiom1_failed) {
            r.dominant_attribute = detect_dominant(oracle, g);
            if (r.dominant_attribute) r.cls = PrefClass::Dominant;
        }
        return r;
    }
    r.nraa = check_nraa(oracle, g);
    if (!r.nraa->satisfied()) {
        r.cls = PrefClass::PairwiseLexicographicOnly;
        return r;
    }
    r.importance = extract_importance(oracle, g);
    r.order = order_attributes(*r.importance);  // CycleError / IncompleteRelationError propagate
    validate_order(r, oracle, g, seed);
    r.cls = (r.agreement == 1.0) ? PrefClass::Lexicographic : PrefClass::Unclassified;
    return r;
}

ChainWitness chain_witness(const PreferenceOracle& oracle, const LexOrder& order,
                           const Alternative& x, const Alternative& y, std::size_t steps) {
    const std::size_t n = oracle.dimension();
    if (order.order.size() != n || x.dimension() != n || y.dimension() != n) {
        throw DimensionError("chain_witness: order and points must match the oracle dimension");
    }
    // Find m: the first order position where x and y differ; x must exceed y
    // there and agree with y on everything before.
    std::size_t m = 0;
    while (m < n && x[order.order[m]] == y[order.order[m]]) ++m;
    if (m == n) throw SpecError("chain_witness: x and y are identical");
    const std::size_t pivot = order.order[m];
    if (!(x[pivot] > y[pivot])) {
        throw SpecError("chain_witness: x must exceed y at the first differing attribute");
    }
    if (steps == 0 || steps < n - 1 - m) {
        throw SpecError("chain_witness: steps must cover the attributes after the pivot");
    }

    ChainWitness cw;
    cw.pivot_attr = pivot;
    cw.pivot_position = m + 1;
    for (std::size_t k = 0; k < m; ++k) cw.before.push_back(order.order[k]);
    for (std::size_t k = m + 1; k < n; ++k) cw.after.push_back(order.order[k]);

    // z[k]: pivot level descends uniformly from x to y; the attributes after
    // the pivot switch to their y-levels one position per step; everything
    // before the pivot never moves.
    const double span = x[pivot] - y[pivot];
    cw.points.push_back(x);
    std::vector<double> coords = x.coords();
    for (std::size_t k = 1; k <= steps; ++k) {
        coords[pivot] =
            y[pivot] + span * static_cast<double>(steps - k) / static_cast<double>(steps);
        if (k <= cw.after.size()) {
            const std::size_t attr = cw.after[k - 1];
            coords[attr] = y[attr];
        }
        cw.points.push_back(Alternative(coords));
    }
    for (std::size_t k = 0; k + 1 < cw.points.size(); ++k) {
        const CO o = oracle.compare(cw.points[k], cw.points[k + 1]);
        cw.links.push_back(o);
        if (o != CO::FirstStrict) {
            throw LinkFailureError("chain_witness: link " + std::to_string(k + 1) + " from " +
                                       cw.points[k].to_string() + " to " +
                                       cw.points[k + 1].to_string() + " is not strictly preferred",
                                   k + 1);
        }
    }
    return cw;
}

std::optional<std::size_t> detect_dominant(const PreferenceOracle& oracle, const Grid& g) {
    const std::size_t n = g.size();
    for (std::size_t attr = 0; attr < oracle.dimension(); ++attr) {
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i) {
            for (std::size_t j = 0; j < n && fits; ++j) {
                const Alternative& x = g.point(i);
                const Alternative& y = g.point(j);
                const CO o = oracle.compare(x, y);
                if (x[attr] > y[attr]) {
                    fits = o == CO::FirstStrict;
                } else if (x[attr] == y[attr]) {
                    fits = o == CO::Indifferent;
                } else {
                    fits = o == CO::SecondStrict;
                }
            }
        }
        if (fits) return attr;
    }
    return std::nullopt;
}

}  // namespace lexpref
