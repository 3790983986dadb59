#include "lexpref/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lexpref {

namespace {

using CO = ComparisonOutcome;

CO from_values(double ux, double uy) {
    if (ux > uy) return CO::FirstStrict;
    if (uy > ux) return CO::SecondStrict;
    return CO::Indifferent;
}

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw SpecError(msg);
}

bool is_permutation_of_iota(const std::vector<std::size_t>& order) {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i) return false;
    }
    return true;
}

CO lex_compare(const std::vector<std::size_t>& order, const Alternative& x, const Alternative& y) {
    for (std::size_t attr : order) {
        if (x[attr] > y[attr]) return CO::FirstStrict;
        if (y[attr] > x[attr]) return CO::SecondStrict;
    }
    return CO::Indifferent;
}

double min_level(const Alternative& x) {
    double m = x[0];
    for (std::size_t i = 1; i < x.dimension(); ++i) m = std::min(m, x[i]);
    return m;
}

double sum_levels(const Alternative& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.dimension(); ++i) s += x[i];
    return s;
}

// Dominance test used by the non-comparable variants: x >= y and x != y.
bool dominates(const Alternative& x, const Alternative& y) {
    bool strict = false;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        if (x[i] < y[i]) return false;
        if (x[i] > y[i]) strict = true;
    }
    return strict;
}

}  // namespace

PreferenceOracle make_lexicographic(std::vector<std::size_t> order) {
    require(!order.empty(), "lex: order must be non-empty");
    require(is_permutation_of_iota(order), "lex: order must be a permutation of the attributes");
    std::string name = "lex:";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(order[i] + 1);
    }
    const std::size_t n = order.size();
    auto fn = [order = std::move(order)](const Alternative& x, const Alternative& y) {
        return lex_compare(order, x, y);
    };
    return PreferenceOracle(std::move(name), n, std::move(fn));
}

PreferenceOracle make_leximax(std::size_t n) {
    require(n >= 2, "leximax: dimension must be at least 2");
    auto fn = [](const Alternative& x, const Alternative& y) {
        std::vector<double> xs = x.coords();
        std::vector<double> ys = y.coords();
        std::sort(xs.begin(), xs.end(), std::greater<>());
        std::sort(ys.begin(), ys.end(), std::greater<>());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] > ys[i]) return CO::FirstStrict;
            if (ys[i] > xs[i]) return CO::SecondStrict;
        }
        return CO::Indifferent;
    };
    return PreferenceOracle("leximax:" + std::to_string(n), n, std::move(fn));
}

PreferenceOracle make_dominant(std::size_t n, std::size_t attr) {
    require(n >= 1 && attr < n, "dominant: attribute out of range");
    auto fn = [attr](const Alternative& x, const Alternative& y) {
        return from_values(x[attr], y[attr]);
    };
    return PreferenceOracle("dominant:" + std::to_string(attr + 1), n, std::move(fn));
}

PreferenceOracle make_perfect_substitutes(std::size_t n) {
    require(n >= 1, "perfsub: dimension must be positive");
    auto fn = [](const Alternative& x, const Alternative& y) {
        return from_values(sum_levels(x), sum_levels(y));
    };
    return PreferenceOracle("perfsub:" + std::to_string(n), n, std::move(fn));
}

PreferenceOracle make_min_multiplicative() {
    auto fn = [](const Alternative& x, const Alternative& y) {
        const double mx = std::min(x[0], x[1]);
        const double my = std::min(y[0], y[1]);
        return from_values(mx + mx * x[2], my + my * y[2]);
    };
    return PreferenceOracle("minmul", 3, std::move(fn));
}

PreferenceOracle make_cobb_douglas(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, "cobb: alpha must lie in (0,1)");
    // Try alpha = p/q with a small denominator so u^q = x1^p * x2^(q-p)
    // compares exactly on grid levels; otherwise fall back to pow().
    std::size_t p = 0, q = 0;
    for (std::size_t den = 2; den <= 16; ++den) {
        const double num = alpha * static_cast<double>(den);
        const double rounded = std::round(num);
        if (num == rounded && rounded >= 1.0 && rounded < static_cast<double>(den)) {
            p = static_cast<std::size_t>(rounded);
            q = den;
            break;
        }
    }
    PreferenceOracle::CompareFn fn;
    if (q != 0) {
        fn = [p, q](const Alternative& x, const Alternative& y) {
            auto powi = [](double base, std::size_t e) {
                double r = 1.0;
                for (std::size_t i = 0; i < e; ++i) r *= base;
                return r;
            };
            return from_values(powi(x[0], p) * powi(x[1], q - p),
                               powi(y[0], p) * powi(y[1], q - p));
        };
    } else {
        fn = [alpha](const Alternative& x, const Alternative& y) {
            return from_values(std::pow(x[0], alpha) * std::pow(x[1], 1.0 - alpha),
                               std::pow(y[0], alpha) * std::pow(y[1], 1.0 - alpha));
        };
    }
    return PreferenceOracle("cobb:" + format_number(alpha), 2, std::move(fn));
}

PreferenceOracle make_pairwise_lex_ex2() {
    // Rules, with x = (x1,x2,x3), y = (y1,y2,y3):
    //   (a) x > y if x1 > y1
    //   (b) (0,x2,x3) > (0,y2,y3) if x2 > y2
    //   (c) (0,x2,x3) > (0,x2,y3) if x3 > y3
    //   (d) (x1,x2,x3) > (x1,y2,y3) if x1 > 0 and x2+x3 > y2+y3
    //   (e) (x1,x2,x3) ~ (x1,y2,y3) if x1 > 0 and x2+x3 = y2+y3
    auto fn = [](const Alternative& x, const Alternative& y) {
        if (x[0] > y[0]) return CO::FirstStrict;
        if (y[0] > x[0]) return CO::SecondStrict;
        if (x[0] == 0.0) {
            if (x[1] > y[1]) return CO::FirstStrict;
            if (y[1] > x[1]) return CO::SecondStrict;
            return from_values(x[2], y[2]);
        }
        return from_values(x[1] + x[2], y[1] + y[2]);
    };
    return PreferenceOracle("ex2", 3, std::move(fn));
}

PreferenceOracle make_ex0() {
    // Case (A): some attribute is zero in both points; the shared zeros drop
    // out, so the comparison reduces to the total of the levels.
    // Case (B): otherwise, the point with a positive minimum beats a point
    // with zero minimum; two positive minima compare by totals; two zero
    // minima are indifferent.
    auto fn = [](const Alternative& x, const Alternative& y) {
        bool shared_zero = false;
        for (std::size_t i = 0; i < 3; ++i) {
            if (x[i] == 0.0 && y[i] == 0.0) shared_zero = true;
        }
        if (shared_zero) {
            return from_values(sum_levels(x), sum_levels(y));
        }
        const double mx = min_level(x);
        const double my = min_level(y);
        if (mx > 0.0 && my == 0.0) return CO::FirstStrict;
        if (my > 0.0 && mx == 0.0) return CO::SecondStrict;
        if (mx == 0.0 && my == 0.0) return CO::Indifferent;
        return from_values(sum_levels(x), sum_levels(y));
    };
    return PreferenceOracle("ex0", 3, std::move(fn));
}

PreferenceOracle make_ex01() {
    // Case (A): some attribute is zero in both points. With two or more
    // shared zeros every applicable 2-attribute rule gives indifference;
    // with exactly one, the pair restricted to the other two attributes is
    // ordered by its minima, then by its total.
    // Case (B): no shared zero; totals decide.
    auto fn = [](const Alternative& x, const Alternative& y) {
        std::size_t shared = 0;
        std::size_t shared_at = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (x[i] == 0.0 && y[i] == 0.0) {
                ++shared;
                shared_at = i;
            }
        }
        if (shared == 0) {
            return from_values(sum_levels(x), sum_levels(y));
        }
        if (shared >= 2) return CO::Indifferent;
        double mx = 0.0, my = 0.0, sx = 0.0, sy = 0.0;
        bool first = true;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == shared_at) continue;
            mx = first ? x[i] : std::min(mx, x[i]);
            my = first ? y[i] : std::min(my, y[i]);
            sx += x[i];
            sy += y[i];
            first = false;
        }
        if (mx > 0.0 && my == 0.0) return CO::FirstStrict;
        if (my > 0.0 && mx == 0.0) return CO::SecondStrict;
        if (mx == 0.0 && my == 0.0) return CO::Indifferent;
        return from_values(sx, sy);
    };
    return PreferenceOracle("ex01", 3, std::move(fn));
}

PreferenceOracle make_lex_semiorder(double eps, std::array<std::size_t, 2> order) {
    require(eps > 0.0, "semiorder: eps must be positive");
    require((order == std::array<std::size_t, 2>{0, 1}) ||
                (order == std::array<std::size_t, 2>{1, 0}),
            "semiorder: order must be a permutation of the two attributes");
    std::string name = "semiorder:eps=" + format_number(eps);
    if (order[0] != 0) name += ",order=2,1";
    auto fn = [eps, order](const Alternative& x, const Alternative& y) {
        const double d0 = x[order[0]] - y[order[0]];
        if (d0 > eps) return CO::FirstStrict;
        if (-d0 > eps) return CO::SecondStrict;
        return from_values(x[order[1]], y[order[1]]);
    };
    return PreferenceOracle(std::move(name), 2, std::move(fn), true, false);
}

PreferenceOracle make_noncomparable_indifferent(std::size_t n) {
    require(n >= 2, "noncomp-indiff: dimension must be at least 2");
    auto fn = [](const Alternative& x, const Alternative& y) {
        if (dominates(x, y)) return CO::FirstStrict;
        if (dominates(y, x)) return CO::SecondStrict;
        return CO::Indifferent;
    };
    return PreferenceOracle("noncomp-indiff", n, std::move(fn), true, false);
}

PreferenceOracle make_noncomparable_incomplete(std::size_t n) {
    require(n >= 2, "noncomp-incomplete: dimension must be at least 2");
    auto fn = [](const Alternative& x, const Alternative& y) {
        if (x == y) return CO::Indifferent;
        if (dominates(x, y)) return CO::FirstStrict;
        if (dominates(y, x)) return CO::SecondStrict;
        return CO::Incomparable;
    };
    return PreferenceOracle("noncomp-incomplete", n, std::move(fn), false, true);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw SpecError("");
        return v;
    } catch (...) {
        throw SpecError("could not parse " + what + ": '" + s + "'");
    }
}

std::size_t parse_index(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size() || v < 1) throw SpecError("");
        return static_cast<std::size_t>(v);
    } catch (...) {
        throw SpecError("could not parse " + what + ": '" + s + "'");
    }
}

}  // namespace

PreferenceOracle parse_oracle_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "lex") {
        if (args.empty()) throw SpecError("lex: expected an attribute order, e.g. lex:1,2,3");
        std::vector<std::size_t> order;
        for (const auto& tok : split(args, ',')) {
            order.push_back(parse_index(tok, "lex attribute") - 1);
        }
        return make_lexicographic(std::move(order));
    }
    if (head == "leximax") {
        if (args.empty()) throw SpecError("leximax: expected a dimension, e.g. leximax:3");
        return make_leximax(parse_index(args, "leximax dimension"));
    }
    if (head == "dominant") {
        if (args.empty()) throw SpecError("dominant: expected an attribute, e.g. dominant:1");
        const std::size_t attr = parse_index(args, "dominant attribute");
        if (attr > 3) throw SpecError("dominant: attribute out of range for dimension 3");
        return make_dominant(3, attr - 1);
    }
    if (head == "perfsub") {
        if (args.empty()) throw SpecError("perfsub: expected a dimension, e.g. perfsub:3");
        return make_perfect_substitutes(parse_index(args, "perfsub dimension"));
    }
    if (head == "minmul") {
        if (!args.empty()) throw SpecError("minmul takes no parameters");
        return make_min_multiplicative();
    }
    if (head == "cobb") {
        if (args.empty()) throw SpecError("cobb: expected an exponent, e.g. cobb:0.5");
        return make_cobb_douglas(parse_double(args, "cobb exponent"));
    }
    if (head == "ex2") {
        if (!args.empty()) throw SpecError("ex2 takes no parameters");
        return make_pairwise_lex_ex2();
    }
    if (head == "ex0") {
        if (!args.empty()) throw SpecError("ex0 takes no parameters");
        return make_ex0();
    }
    if (head == "ex01") {
        if (!args.empty()) throw SpecError("ex01 takes no parameters");
        return make_ex01();
    }
    if (head == "semiorder") {
        double eps = 0.0;
        bool have_eps = false;
        std::array<std::size_t, 2> order = {0, 1};
        // args look like "eps=1" or "eps=1,order=2,1"
        std::string rest = args;
        while (!rest.empty()) {
            if (rest.rfind("eps=", 0) == 0) {
                std::string val = rest.substr(4);
                const auto comma = val.find(',');
                if (comma != std::string::npos) {
                    rest = val.substr(comma + 1);
                    val = val.substr(0, comma);
                } else {
                    rest.clear();
                }
                eps = parse_double(val, "semiorder eps");
                have_eps = true;
            } else if (rest.rfind("order=", 0) == 0) {
                const auto toks = split(rest.substr(6), ',');
                if (toks.size() != 2) throw SpecError("semiorder: order takes two attributes");
                order = {parse_index(toks[0], "semiorder order") - 1,
                         parse_index(toks[1], "semiorder order") - 1};
                rest.clear();
            } else {
                throw SpecError("semiorder: unknown parameter in '" + rest + "'");
            }
        }
        if (!have_eps) throw SpecError("semiorder: expected eps=<threshold>");
        return make_lex_semiorder(eps, order);
    }
    if (head == "noncomp-indiff") {
        if (!args.empty()) throw SpecError("noncomp-indiff takes no parameters");
        return make_noncomparable_indifferent();
    }
    if (head == "noncomp-incomplete") {
        if (!args.empty()) throw SpecError("noncomp-incomplete takes no parameters");
        return make_noncomparable_incomplete();
    }
    throw SpecError("unknown oracle '" + spec + "'");
}

std::vector<ZooEntry> zoo_catalog() {
    return {
        {"lex", "lex:1,2,3", "lexicographic preference for the given attribute order", "n"},
        {"leximax", "leximax:3", "lexicographic comparison of descending order statistics", "n"},
        {"dominant", "dominant:1", "cares exclusively about one attribute (u = x_i)", "3"},
        {"perfsub", "perfsub:3", "perfect substitutes (u = sum of levels)", "n"},
        {"minmul", "minmul", "u = min{x1,x2} + min{x1,x2}*x3", "3"},
        {"cobb", "cobb:0.5", "Cobb-Douglas utility x1^a * x2^(1-a)", "2"},
        {"ex2", "ex2", "pairwise lexicographic but not lexicographic", "3"},
        {"ex0", "ex0", "induced preferences mildly continuous, preference not", "3"},
        {"ex01", "ex01", "preference mildly continuous, induced preferences not", "3"},
        {"semiorder", "semiorder:eps=1", "lexicographic semiorder with threshold eps", "2"},
        {"noncomp-indiff", "noncomp-indiff", "indifferent on non-comparable pairs: complete, not transitive", "3"},
        {"noncomp-incomplete", "noncomp-incomplete", "incomparable on non-comparable pairs: transitive, not complete", "3"},
    };
}

}  // namespace lexpref
