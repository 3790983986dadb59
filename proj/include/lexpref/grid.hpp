#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexpref/core.hpp"

namespace lexpref {

// Finite axis-aligned discretization of the box [0, max]^n with a uniform
// step per axis: the stand-in for the orthant in every quantifier scan.
// Immutable after construction; all queries are read-only.
class Grid {
public:
    Grid(std::size_t dimension, double max, double step);

    std::size_t dimension() const noexcept { return dimension_; }
    double max() const noexcept { return max_; }
    double step() const noexcept { return step_; }
    const std::vector<double>& levels() const noexcept { return levels_; }
    std::size_t levels_per_axis() const noexcept { return levels_.size(); }

    // Number of grid points, levels^n.
    std::size_t size() const noexcept { return points_.size(); }

    // Points are materialized once, in row-major order with the first
    // attribute most significant; flat indices define the canonical scan
    // order used for witness tie-breaking.
    const Alternative& point(std::size_t flat) const { return points_[flat]; }

    // Exact-match lookup; nullopt when some coordinate is not a grid level.
    std::optional<std::size_t> index_of(const Alternative& p) const;

    // All grid points at Euclidean distance < eps from x.
    std::vector<std::size_t> neighborhood(const Alternative& x, double eps) const;

    // "n:max:h"
    std::string spec_string() const;
    static Grid parse(const std::string& spec);

    // Same levels, different dimension (used for induced 2-attribute checks).
    Grid with_dimension(std::size_t dimension) const { return Grid(dimension, max_, step_); }

private:
    std::size_t dimension_;
    double max_;
    double step_;
    std::vector<double> levels_;
    std::vector<Alternative> points_;
};

inline Grid build_grid(std::size_t dimension, double max, double step) {
    return Grid(dimension, max, step);
}

// Subset of the points of one grid. Holds a non-owning reference to the
// grid, which must outlive the set.
class GridSet {
public:
    explicit GridSet(const Grid& grid) : grid_(&grid), member_(grid.size(), false) {}

    const Grid& grid() const noexcept { return *grid_; }
    bool contains(std::size_t flat) const { return member_[flat]; }
    void insert(std::size_t flat) { member_[flat] = true; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    // Ascending flat indices of the members.
    std::vector<std::size_t> indices() const;

    bool is_subset_of(const GridSet& other) const;
    bool operator==(const GridSet& other) const { return member_ == other.member_; }

private:
    const Grid* grid_;
    std::vector<bool> member_;
};

// The contour sets of one anchor under one oracle, plus the grid closure of
// the lower contour set.
struct ContourBundle {
    Alternative anchor;
    GridSet lower;         // { y : x weakly preferred to y }
    GridSet strict_lower;  // { y : x strictly preferred to y }
    GridSet indiff;        // { y : x indifferent to y }
    GridSet closure;       // grid closure of lower (see contours())
};

// Builds the contour bundle by direct oracle queries. Throws
// IncompleteOracleError if any query returns Incomparable.
//
// Grid closure: a point p outside the lower contour joins the closure when
// the oracle still weakly prefers the anchor to some off-grid point within
// step/64 of p (probed in every lattice direction). This keeps the closure
// exact for the axis-aligned sets the theory predicts while adding nothing
// for preferences whose lower contours are already closed; the step is
// reported with every verdict so callers can refine.
ContourBundle contours(const PreferenceOracle& oracle, const Alternative& anchor, const Grid& g);

// Outcome of a set-level scan (also reused by the axiom checkers).
struct UnhappyScan {
    bool satisfied;
    // On violation: flat indices of the outside point and the inside point
    // whose comparison is not strict, plus the offending outcome.
    std::size_t outside = 0;
    std::size_t inside = 0;
    ComparisonOutcome outcome = ComparisonOutcome::Indifferent;
    std::uint64_t queries = 0;
};

// A set is unhappy when every outside grid point strictly beats every
// inside grid point. Scans in flat-index order; the first violation found
// is the lexicographically smallest one.
UnhappyScan is_unhappy(const PreferenceOracle& oracle, const GridSet& a);

struct HalfPlaneFit {
    std::size_t axis;  // 0-based
    double bound;
};

// Fits a = { p : p[axis] <= bound } exactly; nullopt when no axis fits or
// the set is empty or the full grid.
std::optional<HalfPlaneFit> fit_halfplane(const GridSet& a);

}  // namespace lexpref
