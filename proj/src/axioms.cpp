#include "lexpref/axioms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lexpref {

namespace {

using CO = ComparisonOutcome;

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Wraps an oracle so every dispatch bumps a shared counter; the checkers
// report honest query counts including the ones made inside contour and
// unhappy-set scans.
PreferenceOracle counted(const PreferenceOracle& oracle, std::shared_ptr<std::uint64_t> counter) {
    PreferenceOracle inner = oracle;
    auto fn = [inner, counter](const Alternative& x, const Alternative& y) {
        ++*counter;
        return inner.compare(x, y);
    };
    return PreferenceOracle(oracle.name(), oracle.dimension(), std::move(fn),
                            oracle.declared_complete(), oracle.declared_transitive());
}

AxiomVerdict make_verdict(std::string axiom, const Grid& g, std::optional<std::string> eps = {}) {
    AxiomVerdict v;
    v.axiom = std::move(axiom);
    v.grid_spec = g.spec_string();
    v.eps_spec = std::move(eps);
    return v;
}

void require_comparable(CO o, const char* where) {
    if (o == CO::Incomparable) {
        throw IncompleteOracleError(std::string(where) + ": oracle returned incomparable");
    }
}

// Off-grid perturbations of a point: one per lattice direction in
// {-delta, 0, +delta}^n (the all-zero direction keeps the point itself),
// skipping directions that leave the orthant.
std::vector<Alternative> lattice_probes(const Alternative& p, double delta) {
    const std::size_t n = p.dimension();
    std::size_t n_dirs = 1;
    for (std::size_t d = 0; d < n; ++d) n_dirs *= 3;
    std::vector<Alternative> out;
    out.reserve(n_dirs);
    std::vector<double> coords(n, 0.0);
    for (std::size_t code = 0; code < n_dirs; ++code) {
        std::size_t c = code;
        bool valid = true;
        for (std::size_t d = 0; d < n; ++d) {
            const int dir = static_cast<int>(c % 3) - 1;
            c /= 3;
            coords[d] = p[d] + static_cast<double>(dir) * delta;
            if (coords[d] < 0.0) {
                valid = false;
                break;
            }
        }
        if (valid) out.push_back(Alternative(coords));
    }
    return out;
}

}  // namespace

const Alternative* Witness::find(const std::string& label) const {
    for (const auto& lp : points) {
        if (lp.label == label) return &lp.point;
    }
    return nullptr;
}

bool replay_witness(const PreferenceOracle& oracle, const Witness& w) {
    for (const auto& rec : w.comparisons) {
        const Alternative* a = w.find(rec.first);
        const Alternative* b = w.find(rec.second);
        if (!a || !b) return false;
        if (oracle.compare(*a, *b) != rec.outcome) return false;
    }
    return true;
}

std::vector<double> EpsSchedule::values() const {
    std::vector<double> out;
    double v = eps0;
    while (v > floor) {
        out.push_back(v);
        v *= factor;
    }
    out.push_back(floor);
    return out;
}

std::string EpsSchedule::spec_string() const {
    return format_number(eps0) + ":" + format_number(factor) + ":" + format_number(floor);
}

EpsSchedule EpsSchedule::parse(const std::string& spec, double grid_step) {
    const auto first = spec.find(':');
    const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw SpecError("eps schedule must look like eps0:factor:floor, got '" + spec + "'");
    }
    try {
        EpsSchedule s{};
        s.eps0 = std::stod(spec.substr(0, first));
        s.factor = std::stod(spec.substr(first + 1, second - first - 1));
        const std::string floor_tok = spec.substr(second + 1);
        s.floor = (floor_tok == "h") ? grid_step : std::stod(floor_tok);
        s.validate(grid_step);
        return s;
    } catch (const SpecError&) {
        throw;
    } catch (...) {
        throw SpecError("eps schedule must look like eps0:factor:floor, got '" + spec + "'");
    }
}

void EpsSchedule::validate(double grid_step) const {
    if (!(factor > 0.0 && factor < 1.0)) throw SpecError("eps schedule factor must lie in (0,1)");
    if (!(floor >= grid_step)) throw SpecError("eps schedule floor must be at least the grid step");
    if (!(eps0 > floor)) throw SpecError("eps schedule must start above its floor");
}

AxiomVerdict check_complete_transitive(const PreferenceOracle& oracle, const Grid& g) {
    auto counter = std::make_shared<std::uint64_t>(0);
    PreferenceOracle co = counted(oracle, counter);
    AxiomVerdict v = make_verdict("complete_transitive", g);
    const std::size_t n = g.size();
    if (n > 20000) {
        throw BadGridSpec("grid too large for the pairwise outcome matrix; use a coarser step");
    }
    v.scan.space = static_cast<std::uint64_t>(n) * n * n;

    std::vector<std::uint8_t> out(n * n, 0);
    std::optional<std::pair<std::size_t, std::size_t>> incomparable;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const CO o = co.compare(g.point(i), g.point(j));
            out[i * n + j] = static_cast<std::uint8_t>(o);
            out[j * n + i] = static_cast<std::uint8_t>(mirror(o));
            if (o == CO::Incomparable && !incomparable) incomparable = {i, j};
        }
    }
    v.queries = *counter;
    if (incomparable) {
        const auto [i, j] = *incomparable;
        Witness w;
        w.points = {{"x", g.point(i)}, {"y", g.point(j)}};
        w.comparisons = {{"x", "y", CO::Incomparable}};
        w.note = "completeness fails: the pair is non-comparable";
        v.status = VerdictStatus::Violated;
        v.witness = std::move(w);
        return v;
    }

    // Transitivity via bitset rows of the weak-preference relation.
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(n * words, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (weakly_prefers(static_cast<CO>(out[i * n + j]))) {
                rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!weakly_prefers(static_cast<CO>(out[i * n + j]))) continue;
            for (std::size_t wi = 0; wi < words; ++wi) {
                const std::uint64_t bad = rows[j * words + wi] & ~rows[i * words + wi];
                if (!bad) continue;
                const std::size_t k = wi * 64 + static_cast<std::size_t>(std::countr_zero(bad));
                Witness w;
                w.points = {{"x", g.point(i)}, {"y", g.point(j)}, {"z", g.point(k)}};
                w.comparisons = {{"x", "y", static_cast<CO>(out[i * n + j])},
                                 {"y", "z", static_cast<CO>(out[j * n + k])},
                                 {"x", "z", static_cast<CO>(out[i * n + k])}};
                w.note = "transitivity fails: x is weakly preferred to y and y to z, but x is "
                         "not weakly preferred to z";
                v.status = VerdictStatus::Violated;
                v.witness = std::move(w);
                return v;
            }
        }
    }
    return v;
}

AxiomVerdict check_unhappy_set(const PreferenceOracle& oracle, const GridSet& a) {
    const Grid& g = a.grid();
    AxiomVerdict v = make_verdict("unhappy_set", g);
    const std::size_t inside = a.count();
    v.scan.space = static_cast<std::uint64_t>(inside) * (g.size() - inside);
    const UnhappyScan scan = is_unhappy(oracle, a);
    v.queries = scan.queries;
    if (!scan.satisfied) {
        Witness w;
        w.points = {{"y_out", g.point(scan.outside)}, {"x_in", g.point(scan.inside)}};
        w.comparisons = {{"y_out", "x_in", scan.outcome}};
        w.note = "not an unhappy set: the outside point does not strictly beat the inside point";
        v.status = VerdictStatus::Violated;
        v.witness = std::move(w);
    }
    return v;
}

namespace {

AxiomVerdict monotonicity_scan(const PreferenceOracle& oracle, const Grid& g, bool strong) {
    auto counter = std::make_shared<std::uint64_t>(0);
    PreferenceOracle co = counted(oracle, counter);
    AxiomVerdict v = make_verdict(strong ? "strong_monotonicity" : "monotonicity", g);
    const std::size_t n = g.size();
    v.scan.space = static_cast<std::uint64_t>(n) * n;
    for (std::size_t i = 0; i < n; ++i) {
        const Alternative& x = g.point(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Alternative& y = g.point(j);
            bool applies = true;
            bool any_strict = false;
            for (std::size_t d = 0; d < x.dimension() && applies; ++d) {
                if (strong) {
                    if (x[d] < y[d]) applies = false;
                    if (x[d] > y[d]) any_strict = true;
                } else {
                    if (x[d] <= y[d]) applies = false;
                }
            }
            if (!applies || (strong && !any_strict)) continue;
            const CO o = co.compare(x, y);
            if (o != CO::FirstStrict) {
                Witness w;
                w.points = {{"x", x}, {"y", y}};
                w.comparisons = {{"x", "y", o}};
                w.note = strong ? "strong monotonicity fails: x >= y and x != y but x is not "
                                  "strictly preferred"
                                : "monotonicity fails: x > y in every attribute but x is not "
                                  "strictly preferred";
                v.status = VerdictStatus::Violated;
                v.witness = std::move(w);
                v.queries = *counter;
                return v;
            }
        }
    }
    v.queries = *counter;
    return v;
}

}  // namespace

AxiomVerdict check_strong_monotonicity(const PreferenceOracle& oracle, const Grid& g) {
    return monotonicity_scan(oracle, g, true);
}

AxiomVerdict check_monotonicity(const PreferenceOracle& oracle, const Grid& g) {
    return monotonicity_scan(oracle, g, false);
}

namespace {

std::optional<Witness> mild_continuity_probe(const PreferenceOracle& oracle, const Alternative& x,
                                             const Alternative& y,
                                             const std::vector<Alternative>& x_probes,
                                             const std::vector<Alternative>& y_probes,
                                             const EpsSchedule& sched) {
    for (const Alternative& xt : x_probes) {
        for (const Alternative& yt : y_probes) {
            const CO o = oracle.compare(xt, yt);
            if (o != CO::FirstStrict) {
                Witness w;
                w.points = {{"x", x}, {"y", y}, {"x_pert", xt}, {"y_pert", yt}};
                w.comparisons = {{"x", "y", CO::FirstStrict}, {"x_pert", "y_pert", o}};
                w.note = "mild continuity fails at the schedule floor eps=" +
                         format_number(sched.floor) +
                         ": strict preference between totally different points does not survive "
                         "a perturbation of " + format_number(sched.floor / 64.0);
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> mild_continuity_pair_violation(const PreferenceOracle& oracle,
                                                      const Alternative& x, const Alternative& y,
                                                      const EpsSchedule& sched) {
    if (!totally_different(x, y)) return std::nullopt;
    if (oracle.compare(x, y) != CO::FirstStrict) return std::nullopt;
    const double delta = sched.floor / 64.0;
    return mild_continuity_probe(oracle, x, y, lattice_probes(x, delta), lattice_probes(y, delta),
                                 sched);
}

AxiomVerdict check_mild_continuity(const PreferenceOracle& oracle, const Grid& g,
                                   const EpsSchedule& sched) {
    sched.validate(g.step());
    auto counter = std::make_shared<std::uint64_t>(0);
    PreferenceOracle co = counted(oracle, counter);
    AxiomVerdict v = make_verdict("mild_continuity", g, sched.spec_string());
    const std::size_t n = g.size();
    v.scan.space = static_cast<std::uint64_t>(n) * n;
    const double delta = sched.floor / 64.0;

    std::vector<std::vector<Alternative>> probe_cache(n);
    auto probes_of = [&](std::size_t flat) -> const std::vector<Alternative>& {
        if (probe_cache[flat].empty()) probe_cache[flat] = lattice_probes(g.point(flat), delta);
        return probe_cache[flat];
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Alternative& x = g.point(i);
            const Alternative& y = g.point(j);
            if (!totally_different(x, y)) continue;
            if (co.compare(x, y) != CO::FirstStrict) continue;
            auto w = mild_continuity_probe(co, x, y, probes_of(i), probes_of(j), sched);
            if (w) {
                v.status = VerdictStatus::Violated;
                v.witness = std::move(*w);
                v.queries = *counter;
                return v;
            }
        }
    }
    v.queries = *counter;
    return v;
}

namespace {

// IMIA clause scan for one candidate closed unhappy set.
std::optional<Witness> imia_scan_candidate(const PreferenceOracle& oracle, const Grid& g,
                                           const Alternative& anchor, const GridSet& a) {
    const auto& levels = g.levels();
    const auto members = a.indices();
    auto contains_point = [&](double c0, double c1) {
        const auto idx = g.index_of(Alternative{c0, c1});
        return idx && a.contains(*idx);
    };
    auto levels_between = [&](double lo, double hi) {
        std::vector<double> out;
        for (double l : levels) {
            if (l > lo && l < hi) out.push_back(l);
        }
        return out;
    };
    for (std::size_t xi : members) {
        const Alternative& x = g.point(xi);
        for (std::size_t yi : members) {
            if (xi == yi) continue;
            const Alternative& y = g.point(yi);
            if (!totally_different(x, y)) continue;
            const char* clause = nullptr;
            bool ok = true;
            if (y[0] > x[0] && y[1] > x[1]) {
                const auto l0 = levels_between(x[0], y[0]);
                const auto l1 = levels_between(x[1], y[1]);
                if (l0.empty() || l1.empty()) continue;  // resolution-limited, skip
                ok = false;
                for (double c0 : l0) {
                    for (double c1 : l1) {
                        if (contains_point(c0, c1)) ok = true;
                    }
                }
                clause = "(i)";
            } else if (y[1] > x[1] && x[0] > y[0]) {
                const auto l1 = levels_between(x[1], y[1]);
                if (l1.empty()) continue;
                ok = false;
                for (double c1 : l1) {
                    if (contains_point(x[0], c1)) ok = true;
                }
                clause = "(ii)";
            } else if (y[0] > x[0] && x[1] > y[1]) {
                const auto l0 = levels_between(x[0], y[0]);
                if (l0.empty()) continue;
                ok = false;
                for (double c0 : l0) {
                    if (contains_point(c0, x[1])) ok = true;
                }
                clause = "(iii)";
            }
            if (!ok) {
                Witness w;
                w.points = {{"anchor", anchor}, {"x", x}, {"y", y}};
                w.comparisons = {{"anchor", "x", oracle.compare(anchor, x)},
                                 {"anchor", "y", oracle.compare(anchor, y)}};
                w.note = std::string("IMIA clause ") + clause +
                         " fails: no grid level strictly between the bounds keeps the marginally "
                         "improved point inside the closed unhappy set (closure of the lower "
                         "contour of the anchor)";
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> imia_candidate_violation(const PreferenceOracle& oracle2d, const Grid& g2,
                                                const Alternative& anchor) {
    const ContourBundle b = contours(oracle2d, anchor, g2);
    if (!is_unhappy(oracle2d, b.closure).satisfied) return std::nullopt;
    return imia_scan_candidate(oracle2d, g2, anchor, b.closure);
}

AxiomVerdict check_imia(const PreferenceOracle& oracle2d, const Grid& g2) {
    if (oracle2d.dimension() != 2 || g2.dimension() != 2) {
        throw DimensionError("check_imia: IMIA is defined on 2-attribute preferences");
    }
    auto counter = std::make_shared<std::uint64_t>(0);
    PreferenceOracle co = counted(oracle2d, counter);
    AxiomVerdict v = make_verdict("imia", g2);
    const std::size_t n = g2.size();

    // All-indifferent induced preferences have no proper non-empty unhappy
    // sets; IMIA holds vacuously.
    bool degenerate = true;
    for (std::size_t i = 0; i < n && degenerate; ++i) {
        for (std::size_t j = i + 1; j < n && degenerate; ++j) {
            const CO o = co.compare(g2.point(i), g2.point(j));
            require_comparable(o, "check_imia");
            if (o != CO::Indifferent) degenerate = false;
        }
    }
    if (degenerate) {
        v.queries = *counter;
        return v;
    }

    // IMIA presumes a monotone preference.
    const AxiomVerdict mono = check_monotonicity(co, g2);
    if (!mono.satisfied()) {
        std::string detail = "check_imia: the preference is not monotone";
        if (mono.witness) {
            detail += " (" + mono.witness->points[0].point.to_string() + " vs " +
                      mono.witness->points[1].point.to_string() + ")";
        }
        throw MonotonicityPrereqError(detail);
    }

    std::set<std::vector<std::size_t>> seen;
    for (std::size_t flat = 0; flat < n; ++flat) {
        const Alternative& anchor = g2.point(flat);
        bool positive = true;
        for (std::size_t d = 0; d < 2; ++d) {
            if (anchor[d] <= 0.0) positive = false;
        }
        if (!positive) continue;
        const ContourBundle b = contours(co, anchor, g2);
        if (!seen.insert(b.closure.indices()).second) continue;
        if (!is_unhappy(co, b.closure).satisfied) continue;
        auto w = imia_scan_candidate(co, g2, anchor, b.closure);
        if (w) {
            v.status = VerdictStatus::Violated;
            v.witness = std::move(*w);
            break;
        }
    }
    v.queries = *counter;
    v.scan.space = static_cast<std::uint64_t>(n) * n;
    return v;
}

namespace {

// Base-3 sign pattern of the coordinatewise comparison; two ordered pairs
// with equal codes have equal M(x,y) and M(y,x).
std::uint32_t sign_code(const Alternative& x, const Alternative& y) {
    std::uint32_t code = 0;
    for (std::size_t d = 0; d < x.dimension(); ++d) {
        const std::uint32_t digit = x[d] > y[d] ? 2u : (x[d] < y[d] ? 0u : 1u);
        code = code * 3u + digit;
    }
    return code;
}

std::uint8_t strictness_class(CO o) {
    switch (o) {
        case CO::FirstStrict: return 0;
        case CO::SecondStrict: return 1;
        default: return 2;
    }
}

std::string describe_sets(const Alternative& x, const Alternative& y) {
    const StrictSets s = strict_sets(x, y);
    auto fmt = [](const std::vector<std::size_t>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i] + 1);
        }
        return out + "}";
    };
    return "M(x,y)=" + fmt(s.m_first) + ", M(y,x)=" + fmt(s.m_second);
}

AxiomVerdict noncompensation_scan(const PreferenceOracle& oracle, const Grid& g,
                                  const std::string& axiom_id) {
    auto counter = std::make_shared<std::uint64_t>(0);
    PreferenceOracle co = counted(oracle, counter);
    AxiomVerdict v = make_verdict(axiom_id, g);
    const std::size_t n = g.size();
    if (n > 20000) {
        throw BadGridSpec("grid too large for the pairwise outcome matrix; use a coarser step");
    }
    v.scan.space = static_cast<std::uint64_t>(n) * n * n * n;

    // Classify every ordered pair once; the quadruple quantifier reduces to
    // "two pairs with the same sign pattern have the same strictness class",
    // so grouping by pattern is an exact replacement for the O(N^4) scan.
    struct Group {
        std::uint8_t mask = 0;
        std::uint64_t first_by_class[3] = {0, 0, 0};
    };
    std::unordered_map<std::uint32_t, Group> groups;
    std::vector<std::uint8_t> cls(n * n, 0);
    std::vector<std::uint32_t> codes(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const CO o = co.compare(g.point(i), g.point(j));
            require_comparable(o, axiom_id.c_str());
            const std::uint64_t id = static_cast<std::uint64_t>(i) * n + j;
            const std::uint8_t c = strictness_class(o);
            cls[id] = c;
            codes[id] = sign_code(g.point(i), g.point(j));
            auto& grp = groups[codes[id]];
            if (!(grp.mask & (1u << c))) {
                grp.mask |= (1u << c);
                grp.first_by_class[c] = id;
            }
        }
    }
    v.queries = *counter;

    for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(n) * n; ++id) {
        const auto& grp = groups[codes[id]];
        const std::uint8_t others = grp.mask & static_cast<std::uint8_t>(~(1u << cls[id]));
        if (!others) continue;
        std::uint64_t partner = UINT64_MAX;
        for (std::uint8_t c = 0; c < 3; ++c) {
            if (others & (1u << c)) partner = std::min(partner, grp.first_by_class[c]);
        }
        const std::size_t i = static_cast<std::size_t>(id / n);
        const std::size_t j = static_cast<std::size_t>(id % n);
        const std::size_t k = static_cast<std::size_t>(partner / n);
        const std::size_t l = static_cast<std::size_t>(partner % n);
        Witness w;
        w.points = {{"x", g.point(i)}, {"y", g.point(j)}, {"z", g.point(k)}, {"w", g.point(l)}};
        w.comparisons = {{"x", "y", co.compare(g.point(i), g.point(j))},
                         {"z", "w", co.compare(g.point(k), g.point(l))}};
        w.note = "noncompensation fails: " + describe_sets(g.point(i), g.point(j)) +
                 " matches the sign pattern of (z,w) but the strict comparisons differ";
        v.queries = *counter;
        v.status = VerdictStatus::Violated;
        v.witness = std::move(w);
        return v;
    }
    return v;
}

}  // namespace

AxiomVerdict check_noncompensation(const PreferenceOracle& oracle2d, const Grid& g2) {
    if (oracle2d.dimension() != 2 || g2.dimension() != 2) {
        throw DimensionError("check_noncompensation: expected a 2-attribute preference");
    }
    return noncompensation_scan(oracle2d, g2, "noncompensation_induced");
}

AxiomVerdict check_noncompensation_full(const PreferenceOracle& oracle, const Grid& g) {
    return noncompensation_scan(oracle, g, "noncompensation_full");
}

std::optional<Witness> noncompensation_instance_violation(const PreferenceOracle& oracle,
                                                          const Alternative& x,
                                                          const Alternative& y,
                                                          const Alternative& z,
                                                          const Alternative& w) {
    if (sign_code(x, y) != sign_code(z, w)) return std::nullopt;
    const CO oxy = oracle.compare(x, y);
    const CO ozw = oracle.compare(z, w);
    if (strictness_class(oxy) == strictness_class(ozw)) return std::nullopt;
    Witness wit;
    wit.points = {{"x", x}, {"y", y}, {"z", z}, {"w", w}};
    wit.comparisons = {{"x", "y", oxy}, {"z", "w", ozw}};
    wit.note = "noncompensation fails: " + describe_sets(x, y) +
               " matches the sign pattern of (z,w) but the strict comparisons differ";
    return wit;
}

AxiomVerdict check_nraa(const PreferenceOracle& oracle, const Grid& g) {
    auto counter = std::make_shared<std::uint64_t>(0);
    PreferenceOracle co = counted(oracle, counter);
    AxiomVerdict v = make_verdict("nraa", g);
    const std::size_t n = oracle.dimension();
    if (n == 2) {
        // No attributes outside any 2-subset; nothing can be added.
        return v;
    }
    const Grid g2 = g.with_dimension(2);
    const Grid gfill = g.with_dimension(n - 2);
    for (const AttributeSubset& s : two_subsets(n)) {
        std::vector<std::size_t> comp;
        for (std::size_t d = 0; d < n; ++d) {
            if (!s.contains(d)) comp.push_back(d);
        }
        auto assemble = [&](const Alternative& part, const Alternative& fill) {
            std::vector<double> coords(n, 0.0);
            for (std::size_t k = 0; k < 2; ++k) coords[s.members()[k]] = part[k];
            for (std::size_t k = 0; k < comp.size(); ++k) coords[comp[k]] = fill[k];
            return Alternative(coords);
        };
        for (std::size_t xi = 0; xi < g2.size(); ++xi) {
            for (std::size_t yi = 0; yi < g2.size(); ++yi) {
                if (xi == yi) continue;
                const Alternative x0 = embed(g2.point(xi), s, n);
                const Alternative y0 = embed(g2.point(yi), s, n);
                const CO base = co.compare(x0, y0);
                require_comparable(base, "check_nraa");
                if (base != CO::FirstStrict) continue;
                for (std::size_t fi = 0; fi < gfill.size(); ++fi) {
                    const Alternative xz = assemble(g2.point(xi), gfill.point(fi));
                    const Alternative yz = assemble(g2.point(yi), gfill.point(fi));
                    const CO lifted = co.compare(xz, yz);
                    if (lifted != CO::FirstStrict) {
                        Witness w;
                        w.points = {{"x0", x0}, {"y0", y0}, {"xz", xz}, {"yz", yz}};
                        w.comparisons = {{"x0", "y0", base}, {"xz", "yz", lifted}};
                        w.note = "NRAA fails for S=" + s.to_string() +
                                 ": the strict preference on the 2-subset reverses after adding "
                                 "the fill " + gfill.point(fi).to_string() +
                                 " on the remaining attributes";
                        v.status = VerdictStatus::Violated;
                        v.witness = std::move(w);
                        v.queries = *counter;
                        return v;
                    }
                }
            }
        }
    }
    v.queries = *counter;
    return v;
}

std::optional<Witness> nraa_instance_violation(const PreferenceOracle& oracle,
                                               const AttributeSubset& s, const Alternative& x_s,
                                               const Alternative& y_s, const Alternative& fill) {
    const std::size_t n = oracle.dimension();
    if (s.size() != 2 || x_s.dimension() != 2 || y_s.dimension() != 2) {
        throw DimensionError("nraa_instance_violation: expects a 2-subset and 2-level points");
    }
    std::vector<std::size_t> comp;
    for (std::size_t d = 0; d < n; ++d) {
        if (!s.contains(d)) comp.push_back(d);
    }
    if (fill.dimension() != comp.size()) {
        throw DimensionError("nraa_instance_violation: fill dimension mismatch");
    }
    auto assemble = [&](const Alternative& part) {
        std::vector<double> coords(n, 0.0);
        for (std::size_t k = 0; k < 2; ++k) coords[s.members()[k]] = part[k];
        for (std::size_t k = 0; k < comp.size(); ++k) coords[comp[k]] = fill[k];
        return Alternative(coords);
    };
    const Alternative x0 = embed(x_s, s, n);
    const Alternative y0 = embed(y_s, s, n);
    const CO base = oracle.compare(x0, y0);
    if (base != CO::FirstStrict) return std::nullopt;
    const Alternative xz = assemble(x_s);
    const Alternative yz = assemble(y_s);
    const CO lifted = oracle.compare(xz, yz);
    if (lifted == CO::FirstStrict) return std::nullopt;
    Witness w;
    w.points = {{"x0", x0}, {"y0", y0}, {"xz", xz}, {"yz", yz}};
    w.comparisons = {{"x0", "y0", base}, {"xz", "yz", lifted}};
    w.note = "NRAA fails for S=" + s.to_string() + " with fill " + fill.to_string();
    return w;
}

AxiomVerdict check_independence(const PreferenceOracle& oracle, const Grid& g) {
    auto counter = std::make_shared<std::uint64_t>(0);
    PreferenceOracle co = counted(oracle, counter);
    AxiomVerdict v = make_verdict("independence", g);
    const std::size_t n = oracle.dimension();
    if (n == 1) return v;  // no fill to vary
    const Grid gfill = g.with_dimension(n - 1);
    auto assemble = [&](std::size_t attr, double level, const Alternative& fill) {
        std::vector<double> coords(n, 0.0);
        std::size_t k = 0;
        for (std::size_t d = 0; d < n; ++d) {
            coords[d] = (d == attr) ? level : fill[k++];
        }
        return Alternative(coords);
    };
    for (std::size_t attr = 0; attr < n; ++attr) {
        for (double xi : g.levels()) {
            for (double yi : g.levels()) {
                if (xi == yi) continue;
                bool ref_bit = false;
                for (std::size_t fi = 0; fi < gfill.size(); ++fi) {
                    const Alternative a = assemble(attr, xi, gfill.point(fi));
                    const Alternative b = assemble(attr, yi, gfill.point(fi));
                    const CO o = co.compare(a, b);
                    require_comparable(o, "check_independence");
                    const bool bit = o == CO::FirstStrict;
                    if (fi == 0) {
                        ref_bit = bit;
                    } else if (bit != ref_bit) {
                        const Alternative a0 = assemble(attr, xi, gfill.point(0));
                        const Alternative b0 = assemble(attr, yi, gfill.point(0));
                        Witness w;
                        w.points = {{"x_z", a0}, {"y_z", b0}, {"x_zt", a}, {"y_zt", b}};
                        w.comparisons = {{"x_z", "y_z", co.compare(a0, b0)}, {"x_zt", "y_zt", o}};
                        w.note = "independence fails for attribute " + std::to_string(attr + 1) +
                                 " with levels " + format_number(xi) + " vs " + format_number(yi) +
                                 ": the strict-preference bit depends on the common fill";
                        v.status = VerdictStatus::Violated;
                        v.witness = std::move(w);
                        v.queries = *counter;
                        return v;
                    }
                }
            }
        }
    }
    v.queries = *counter;
    return v;
}

std::optional<Witness> independence_instance_violation(const PreferenceOracle& oracle,
                                                       std::size_t attr, double xi, double yi,
                                                       const Alternative& fill_a,
                                                       const Alternative& fill_b) {
    const std::size_t n = oracle.dimension();
    if (attr >= n || fill_a.dimension() != n - 1 || fill_b.dimension() != n - 1) {
        throw DimensionError("independence_instance_violation: bad attribute or fill dimension");
    }
    auto assemble = [&](double level, const Alternative& fill) {
        std::vector<double> coords(n, 0.0);
        std::size_t k = 0;
        for (std::size_t d = 0; d < n; ++d) {
            coords[d] = (d == attr) ? level : fill[k++];
        }
        return Alternative(coords);
    };
    const Alternative a0 = assemble(xi, fill_a);
    const Alternative b0 = assemble(yi, fill_a);
    const Alternative a1 = assemble(xi, fill_b);
    const Alternative b1 = assemble(yi, fill_b);
    const CO o0 = oracle.compare(a0, b0);
    const CO o1 = oracle.compare(a1, b1);
    if ((o0 == CO::FirstStrict) == (o1 == CO::FirstStrict)) return std::nullopt;
    Witness w;
    w.points = {{"x_z", a0}, {"y_z", b0}, {"x_zt", a1}, {"y_zt", b1}};
    w.comparisons = {{"x_z", "y_z", o0}, {"x_zt", "y_zt", o1}};
    w.note = "independence fails for attribute " + std::to_string(attr + 1);
    return w;
}

const char* pair_axiom_id(PairAxiom a) {
    switch (a) {
        case PairAxiom::StrongMonotonicity: return "strong_monotonicity";
        case PairAxiom::MildContinuity: return "mild_continuity";
        case PairAxiom::Imia: return "imia";
        case PairAxiom::Noncompensation: return "noncompensation_induced";
    }
    return "unknown";
}

std::vector<AttributeSubset> two_subsets(std::size_t n) {
    if (n < 2) throw SubsetError("two_subsets: dimension must be at least 2");
    std::vector<AttributeSubset> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out.push_back(AttributeSubset::from_zero_based({i, j}));
        }
    }
    return out;
}

std::vector<PairAxiomRun> check_axiom_all_pairs(const PreferenceOracle& oracle, const Grid& g,
                                                PairAxiom axiom, const EpsSchedule& sched) {
    std::vector<PairAxiomRun> runs;
    const Grid g2 = g.with_dimension(2);
    for (const AttributeSubset& s : two_subsets(oracle.dimension())) {
        const PreferenceOracle induced = induce(oracle, s);
        PairAxiomRun run{s, std::nullopt, ""};
        try {
            switch (axiom) {
                case PairAxiom::StrongMonotonicity:
                    run.verdict = check_strong_monotonicity(induced, g2);
                    break;
                case PairAxiom::MildContinuity:
                    run.verdict = check_mild_continuity(induced, g2, sched);
                    break;
                case PairAxiom::Imia:
                    run.verdict = check_imia(induced, g2);
                    break;
                case PairAxiom::Noncompensation:
                    run.verdict = check_noncompensation(induced, g2);
                    break;
            }
        } catch (const MonotonicityPrereqError& e) {
            run.error = e.what();
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

AxiomVerdict aggregate_pair_axiom(const std::vector<PairAxiomRun>& runs,
                                  const std::string& axiom_id) {
    AxiomVerdict out;
    out.axiom = axiom_id;
    bool first = true;
    for (const auto& run : runs) {
        if (run.verdict) {
            if (first) {
                out.grid_spec = run.verdict->grid_spec;
                out.eps_spec = run.verdict->eps_spec;
                first = false;
            }
            out.queries += run.verdict->queries;
            out.scan.space += run.verdict->scan.space;
        }
    }
    for (const auto& run : runs) {
        if (run.verdict && !run.verdict->satisfied()) {
            out.status = VerdictStatus::Violated;
            out.witness = run.verdict->witness;
            if (out.witness) {
                out.witness->note = "S=" + run.subset.to_string() + ": " + out.witness->note;
            }
            return out;
        }
    }
    for (const auto& run : runs) {
        if (!run.error.empty()) {
            throw MonotonicityPrereqError("S=" + run.subset.to_string() + ": " + run.error);
        }
    }
    return out;
}

}  // namespace lexpref
