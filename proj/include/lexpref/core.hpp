#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lexpref/errors.hpp"

namespace lexpref {

// A point of the non-negative orthant: one level per attribute.
// Coordinates are plain doubles; equality of coordinates is exact
// representational equality (grids are built from exactly representable
// levels, so no tolerance is involved anywhere).
class Alternative {
public:
    Alternative() = default;
    explicit Alternative(std::vector<double> coords);
    Alternative(std::initializer_list<double> coords);

    std::size_t dimension() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const noexcept { return coords_[i]; }
    const std::vector<double>& coords() const noexcept { return coords_; }

    bool operator==(const Alternative& other) const noexcept { return coords_ == other.coords_; }
    bool operator!=(const Alternative& other) const noexcept { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<double> coords_;
};

enum class ComparisonOutcome {
    FirstStrict,   // x > y in the preference sense
    SecondStrict,  // y > x
    Indifferent,
    Incomparable,  // neither x >= y nor y >= x (incomplete preferences only)
};

const char* outcome_name(ComparisonOutcome o);

// Flips FirstStrict/SecondStrict, fixes Indifferent/Incomparable.
ComparisonOutcome mirror(ComparisonOutcome o);

// Non-empty sorted set of 0-based attribute indices. Reports and spec
// strings use 1-based attribute numbers; the conversion happens only at
// those boundaries.
class AttributeSubset {
public:
    static AttributeSubset from_zero_based(std::vector<std::size_t> members);
    static AttributeSubset from_one_based(const std::vector<std::size_t>& members);

    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(std::size_t attr) const noexcept;

    // "{2,3}" with 1-based attribute numbers, for reports.
    std::string to_string() const;

    bool operator==(const AttributeSubset& other) const noexcept = default;

private:
    explicit AttributeSubset(std::vector<std::size_t> members) : members_(std::move(members)) {}
    std::vector<std::size_t> members_;
};

// A named, pure, deterministic comparator over pairs of alternatives of a
// fixed dimension. Oracles carry no state, so they are safe for
// unrestricted concurrent use.
class PreferenceOracle {
public:
    using CompareFn = std::function<ComparisonOutcome(const Alternative&, const Alternative&)>;

    PreferenceOracle(std::string name, std::size_t dimension, CompareFn fn,
                     bool declared_complete = true, bool declared_transitive = true);

    const std::string& name() const noexcept { return name_; }
    std::size_t dimension() const noexcept { return dimension_; }
    bool declared_complete() const noexcept { return declared_complete_; }
    bool declared_transitive() const noexcept { return declared_transitive_; }

    // Dispatches to the comparator; throws DimensionError on length mismatch.
    ComparisonOutcome compare(const Alternative& x, const Alternative& y) const;

private:
    std::string name_;
    std::size_t dimension_ = 0;
    CompareFn compare_;
    bool declared_complete_ = true;
    bool declared_transitive_ = true;
};

inline ComparisonOutcome compare(const PreferenceOracle& oracle, const Alternative& x,
                                 const Alternative& y) {
    return oracle.compare(x, y);
}

inline bool weakly_prefers(ComparisonOutcome o) {
    return o == ComparisonOutcome::FirstStrict || o == ComparisonOutcome::Indifferent;
}

// x and y differ in every attribute.
bool totally_different(const Alternative& x, const Alternative& y);

// Embeds an |s|-dimensional alternative at the coordinates of s, zero
// elsewhere.
Alternative embed(const Alternative& partial, const AttributeSubset& s, std::size_t dimension);

// The induced preference: compares |s|-dimensional points by embedding them
// at the coordinates of s with zeros elsewhere and delegating to the parent.
PreferenceOracle induce(const PreferenceOracle& oracle, const AttributeSubset& s);

// Partition of the attribute set by the coordinatewise comparison of x and y:
// M(x,y), M(y,x) and E(x,y). Any of the three parts may be empty;
// their union is always {0,...,n-1}.
struct StrictSets {
    std::vector<std::size_t> m_first;   // attributes where x_i > y_i
    std::vector<std::size_t> m_second;  // attributes where y_i > x_i
    std::vector<std::size_t> equal;     // attributes where x_i = y_i
};

StrictSets strict_sets(const Alternative& x, const Alternative& y);

}  // namespace lexpref
