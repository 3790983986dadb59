#include "lexpref/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace lexpref {

namespace {

void validate_coords(const std::vector<double>& coords) {
    if (coords.empty()) {
        throw DomainError("alternative must have at least one attribute");
    }
    for (double c : coords) {
        if (!std::isfinite(c) || c < 0.0) {
            throw DomainError("attribute levels must be finite and non-negative");
        }
    }
}

std::string format_level(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

Alternative::Alternative(std::vector<double> coords) : coords_(std::move(coords)) {
    validate_coords(coords_);
}

Alternative::Alternative(std::initializer_list<double> coords) : coords_(coords) {
    validate_coords(coords_);
}

std::string Alternative::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += format_level(coords_[i]);
    }
    out += ")";
    return out;
}

const char* outcome_name(ComparisonOutcome o) {
    switch (o) {
        case ComparisonOutcome::FirstStrict: return "first_strict";
        case ComparisonOutcome::SecondStrict: return "second_strict";
        case ComparisonOutcome::Indifferent: return "indifferent";
        case ComparisonOutcome::Incomparable: return "incomparable";
    }
    return "unknown";
}

ComparisonOutcome mirror(ComparisonOutcome o) {
    switch (o) {
        case ComparisonOutcome::FirstStrict: return ComparisonOutcome::SecondStrict;
        case ComparisonOutcome::SecondStrict: return ComparisonOutcome::FirstStrict;
        default: return o;
    }
}

AttributeSubset AttributeSubset::from_zero_based(std::vector<std::size_t> members) {
    if (members.empty()) {
        throw SubsetError("attribute subset must be non-empty");
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw SubsetError("attribute subset contains duplicate indices");
    }
    return AttributeSubset(std::move(members));
}

AttributeSubset AttributeSubset::from_one_based(const std::vector<std::size_t>& members) {
    std::vector<std::size_t> zero;
    zero.reserve(members.size());
    for (std::size_t m : members) {
        if (m == 0) {
            throw SubsetError("attribute numbers are 1-based");
        }
        zero.push_back(m - 1);
    }
    return from_zero_based(std::move(zero));
}

bool AttributeSubset::contains(std::size_t attr) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), attr);
}

std::string AttributeSubset::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(members_[i] + 1);
    }
    out += "}";
    return out;
}

PreferenceOracle::PreferenceOracle(std::string name, std::size_t dimension, CompareFn fn,
                                   bool declared_complete, bool declared_transitive)
    : name_(std::move(name)),
      dimension_(dimension),
      compare_(std::move(fn)),
      declared_complete_(declared_complete),
      declared_transitive_(declared_transitive) {
    if (dimension_ == 0) {
        throw SpecError("oracle dimension must be positive");
    }
    if (!compare_) {
        throw SpecError("oracle comparator must be callable");
    }
}

ComparisonOutcome PreferenceOracle::compare(const Alternative& x, const Alternative& y) const {
    if (x.dimension() != dimension_ || y.dimension() != dimension_) {
        throw DimensionError("compare: alternatives do not match oracle dimension " +
                             std::to_string(dimension_));
    }
    return compare_(x, y);
}

bool totally_different(const Alternative& x, const Alternative& y) {
    if (x.dimension() != y.dimension()) {
        throw DimensionError("totally_different: dimension mismatch");
    }
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        if (x[i] == y[i]) return false;
    }
    return true;
}

Alternative embed(const Alternative& partial, const AttributeSubset& s, std::size_t dimension) {
    if (partial.dimension() != s.size()) {
        throw DimensionError("embed: point dimension does not match subset size");
    }
    if (s.members().back() >= dimension) {
        throw SubsetError("embed: subset exceeds dimension");
    }
    std::vector<double> coords(dimension, 0.0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        coords[s.members()[k]] = partial[k];
    }
    return Alternative(std::move(coords));
}

PreferenceOracle induce(const PreferenceOracle& oracle, const AttributeSubset& s) {
    const std::size_t n = oracle.dimension();
    if (s.members().back() >= n) {
        throw SubsetError("induce: subset exceeds oracle dimension");
    }
    std::string name = "induced(" + oracle.name() + ";S=" + s.to_string() + ")";
    // The induced comparator captures the parent by value: oracles are
    // cheap immutable values and the result must not dangle.
    PreferenceOracle parent = oracle;
    AttributeSubset subset = s;
    auto fn = [parent, subset, n](const Alternative& a, const Alternative& b) {
        return parent.compare(embed(a, subset, n), embed(b, subset, n));
    };
    return PreferenceOracle(std::move(name), s.size(), std::move(fn),
                            oracle.declared_complete(), oracle.declared_transitive());
}

StrictSets strict_sets(const Alternative& x, const Alternative& y) {
    if (x.dimension() != y.dimension()) {
        throw DimensionError("strict_sets: dimension mismatch");
    }
    StrictSets out;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        if (x[i] > y[i]) {
            out.m_first.push_back(i);
        } else if (y[i] > x[i]) {
            out.m_second.push_back(i);
        } else {
            out.equal.push_back(i);
        }
    }
    return out;
}

}  // namespace lexpref
