#include "lexpref/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lexpref {

Grid::Grid(std::size_t dimension, double max, double step)
    : dimension_(dimension), max_(max), step_(step) {
    if (dimension == 0) throw BadGridSpec("grid dimension must be positive");
    if (!(max > 0.0) || !std::isfinite(max)) throw BadGridSpec("grid max must be positive");
    if (!(step > 0.0) || !std::isfinite(step)) throw BadGridSpec("grid step must be positive");
    const double ratio = max / step;
    const double k = std::round(ratio);
    if (k < 1.0 || std::abs(ratio - k) > 1e-9 * std::max(1.0, ratio)) {
        throw BadGridSpec("grid max must be an integer multiple of the step");
    }
    const std::size_t steps = static_cast<std::size_t>(k);
    levels_.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        levels_.push_back(static_cast<double>(i) * step);
    }
    // len^n points; refuse absurd sizes instead of exhausting memory.
    double total = 1.0;
    for (std::size_t d = 0; d < dimension; ++d) total *= static_cast<double>(levels_.size());
    if (total > 2e7) throw BadGridSpec("grid has too many points for desk-scale scans");
    const std::size_t n_points = static_cast<std::size_t>(total);
    points_.reserve(n_points);
    std::vector<std::size_t> digit(dimension, 0);
    std::vector<double> coords(dimension, 0.0);
    for (std::size_t flat = 0; flat < n_points; ++flat) {
        for (std::size_t d = 0; d < dimension; ++d) coords[d] = levels_[digit[d]];
        points_.push_back(Alternative(coords));
        for (std::size_t d = dimension; d-- > 0;) {
            if (++digit[d] < levels_.size()) break;
            digit[d] = 0;
        }
    }
}

std::optional<std::size_t> Grid::index_of(const Alternative& p) const {
    if (p.dimension() != dimension_) return std::nullopt;
    std::size_t flat = 0;
    for (std::size_t d = 0; d < dimension_; ++d) {
        const auto it = std::lower_bound(levels_.begin(), levels_.end(), p[d]);
        if (it == levels_.end() || *it != p[d]) return std::nullopt;
        flat = flat * levels_.size() + static_cast<std::size_t>(it - levels_.begin());
    }
    return flat;
}

std::vector<std::size_t> Grid::neighborhood(const Alternative& x, double eps) const {
    if (x.dimension() != dimension_) throw DimensionError("neighborhood: dimension mismatch");
    std::vector<std::size_t> out;
    const double eps2 = eps * eps;
    for (std::size_t flat = 0; flat < points_.size(); ++flat) {
        const Alternative& p = points_[flat];
        double d2 = 0.0;
        for (std::size_t d = 0; d < dimension_; ++d) {
            const double diff = p[d] - x[d];
            d2 += diff * diff;
        }
        if (d2 < eps2) out.push_back(flat);
    }
    return out;
}

std::string Grid::spec_string() const {
    std::ostringstream os;
    os << dimension_ << ":" << max_ << ":" << step_;
    return os.str();
}

Grid Grid::parse(const std::string& spec) {
    std::size_t first = spec.find(':');
    std::size_t second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw BadGridSpec("grid spec must look like n:max:h, got '" + spec + "'");
    }
    try {
        std::size_t pos = 0;
        const long n = std::stol(spec.substr(0, first), &pos);
        if (pos != first || n < 1) throw BadGridSpec("");
        const double max = std::stod(spec.substr(first + 1, second - first - 1));
        const double h = std::stod(spec.substr(second + 1));
        return Grid(static_cast<std::size_t>(n), max, h);
    } catch (const BadGridSpec&) {
        throw;
    } catch (...) {
        throw BadGridSpec("grid spec must look like n:max:h, got '" + spec + "'");
    }
}

std::size_t GridSet::count() const {
    return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

std::vector<std::size_t> GridSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i]) out.push_back(i);
    }
    return out;
}

bool GridSet::is_subset_of(const GridSet& other) const {
    for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i] && !other.member_[i]) return false;
    }
    return true;
}

ContourBundle contours(const PreferenceOracle& oracle, const Alternative& anchor, const Grid& g) {
    if (oracle.dimension() != g.dimension() || anchor.dimension() != g.dimension()) {
        throw DimensionError("contours: oracle, anchor and grid dimensions must agree");
    }
    ContourBundle b{anchor, GridSet(g), GridSet(g), GridSet(g), GridSet(g)};
    for (std::size_t flat = 0; flat < g.size(); ++flat) {
        const ComparisonOutcome o = oracle.compare(anchor, g.point(flat));
        switch (o) {
            case ComparisonOutcome::FirstStrict:
                b.strict_lower.insert(flat);
                b.lower.insert(flat);
                b.closure.insert(flat);
                break;
            case ComparisonOutcome::Indifferent:
                b.indiff.insert(flat);
                b.lower.insert(flat);
                b.closure.insert(flat);
                break;
            case ComparisonOutcome::SecondStrict:
                break;
            case ComparisonOutcome::Incomparable:
                throw IncompleteOracleError("contours: oracle returned incomparable for " +
                                            anchor.to_string() + " vs " +
                                            g.point(flat).to_string());
        }
    }
    // Closure probes: for points outside the lower contour, ask the oracle
    // about off-grid points a hair away in every lattice direction.
    const double delta = g.step() / 64.0;
    const std::size_t n = g.dimension();
    const std::size_t n_dirs = [&] {
        std::size_t t = 1;
        for (std::size_t d = 0; d < n; ++d) t *= 3;
        return t;
    }();
    std::vector<double> probe(n, 0.0);
    for (std::size_t flat = 0; flat < g.size(); ++flat) {
        if (b.lower.contains(flat)) continue;
        const Alternative& p = g.point(flat);
        bool near = false;
        for (std::size_t code = 0; code < n_dirs && !near; ++code) {
            std::size_t c = code;
            bool valid = true;
            bool moved = false;
            for (std::size_t d = 0; d < n; ++d) {
                const int dir = static_cast<int>(c % 3) - 1;  // -1, 0, +1
                c /= 3;
                if (dir != 0) moved = true;
                probe[d] = p[d] + static_cast<double>(dir) * delta;
                if (probe[d] < 0.0) {
                    valid = false;
                    break;
                }
            }
            if (!valid || !moved) continue;  // p itself is already known to be outside
            if (weakly_prefers(oracle.compare(anchor, Alternative(probe)))) near = true;
        }
        if (near) b.closure.insert(flat);
    }
    return b;
}

UnhappyScan is_unhappy(const PreferenceOracle& oracle, const GridSet& a) {
    const Grid& g = a.grid();
    UnhappyScan scan{true};
    for (std::size_t out = 0; out < g.size(); ++out) {
        if (a.contains(out)) continue;
        for (std::size_t in = 0; in < g.size(); ++in) {
            if (!a.contains(in)) continue;
            ++scan.queries;
            const ComparisonOutcome o = oracle.compare(g.point(out), g.point(in));
            if (o == ComparisonOutcome::Incomparable) {
                throw IncompleteOracleError("is_unhappy: oracle returned incomparable");
            }
            if (o != ComparisonOutcome::FirstStrict) {
                scan.satisfied = false;
                scan.outside = out;
                scan.inside = in;
                scan.outcome = o;
                return scan;
            }
        }
    }
    return scan;
}

std::optional<HalfPlaneFit> fit_halfplane(const GridSet& a) {
    const Grid& g = a.grid();
    const std::size_t total = a.count();
    if (total == 0 || total == g.size()) return std::nullopt;
    for (std::size_t axis = 0; axis < g.dimension(); ++axis) {
        double bound = -1.0;
        for (std::size_t flat = 0; flat < g.size(); ++flat) {
            if (a.contains(flat)) bound = std::max(bound, g.point(flat)[axis]);
        }
        bool exact = true;
        for (std::size_t flat = 0; flat < g.size() && exact; ++flat) {
            const bool below = g.point(flat)[axis] <= bound;
            if (below != a.contains(flat)) exact = false;
        }
        if (exact) return HalfPlaneFit{axis, bound};
    }
    return std::nullopt;
}

}  // namespace lexpref
