#pragma once
// Attribute reduction: significance measures, a greedy reducer driven by
// them, and an exhaustive enumerator of all reductions.
//
// A subset B of attributes is a reduction for a measure M when
//   (1) M(R_B) equals M(R_A) within tolerance epsilon, and
//   (2) removing any single attribute of B changes M(R_B) by more than
//       epsilon (every member is necessary).
//
// Conventions for the empty subset (needed by the significance bootstrap):
// R_empty = U x U (the vacuous quantifier), its transitive degree is 1 (the
// complete relation is transitive), and its cluster degree is defined as 0
// (no attributes, no cohesion evidence).

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "info_system.hpp"
#include "measures.hpp"
#include "relation.hpp"

namespace ivrough {

// Which measure drives the reduction; cluster degree carries the similarity
// family used for its cohesion terms.
struct MeasureKind {
    MeasureTag tag{MeasureTag::transitive_degree};
    Family sim_for_cd{Family::SF};  // meaningful only for cluster degree
    CdDenominator cd_mode{CdDenominator::neighborhood_of_b};

    static MeasureKind td() { return {MeasureTag::transitive_degree, Family::SF, CdDenominator::neighborhood_of_b}; }
    static MeasureKind cd(Family sim, CdDenominator mode = CdDenominator::neighborhood_of_b) {
        return {MeasureTag::cluster_degree, sim, mode};
    }
};

// Default reduction tolerance.  Both measures are means of smooth or
// small-integer-ratio terms: genuine ties are exact in infinite precision,
// and 1e-9 cleanly separates them from double rounding noise.
inline constexpr double kDefaultEpsilon = 1e-9;

// M(R_B) for any subset B (including the empty one, via the conventions).
inline double evaluate_measure(const InformationSystem& s, const std::vector<std::string>& b,
                               double lambda, Family family, const MeasureKind& kind) {
    if (b.empty())
        return kind.tag == MeasureTag::transitive_degree ? 1.0 : 0.0;
    if (kind.tag == MeasureTag::transitive_degree) {
        const BinaryRelation r = lambda_relation(s, {b, lambda, family});
        return transitive_degree(r).aggregate;
    }
    return cluster_degree(s, {b, lambda, family}, kind.sim_for_cd, kind.cd_mode).aggregate;
}

namespace detail {

inline std::vector<std::string> without(const std::vector<std::string>& b, const std::string& a) {
    std::vector<std::string> out;
    out.reserve(b.size() - 1);
    for (const std::string& x : b)
        if (x != a) out.push_back(x);
    return out;
}

// Canonical form: attribute names in the system's own attribute order.
inline std::vector<std::string> canonical(const InformationSystem& s, std::vector<std::string> b) {
    std::sort(b.begin(), b.end(), [&](const std::string& x, const std::string& y) {
        return s.attribute_index(x) < s.attribute_index(y);
    });
    return b;
}

}  // namespace detail

// |M(R_b) - M(R_{b - {a}})|: how much removing `a` from `b` changes the measure.
inline double sig_inner(const InformationSystem& s, const std::vector<std::string>& b,
                        const std::string& a, double lambda, Family family, const MeasureKind& kind) {
    if (b.empty()) throw Error("sig_inner: subset must be nonempty");
    if (std::find(b.begin(), b.end(), a) == b.end())
        throw Error("sig_inner: attribute '" + a + "' is not in the subset");
    const double with = evaluate_measure(s, b, lambda, family, kind);
    const double without = evaluate_measure(s, detail::without(b, a), lambda, family, kind);
    return std::abs(with - without);
}

// |M(R_{b + {a}}) - M(R_b)|: how much adding `a` to `b` changes the measure.
inline double sig_outer(const InformationSystem& s, const std::vector<std::string>& b,
                        const std::string& a, double lambda, Family family, const MeasureKind& kind) {
    if (std::find(b.begin(), b.end(), a) != b.end())
        throw Error("sig_outer: attribute '" + a + "' is already in the subset");
    std::vector<std::string> grown = b;
    grown.push_back(a);
    const double with = evaluate_measure(s, grown, lambda, family, kind);
    const double base = evaluate_measure(s, b, lambda, family, kind);
    return std::abs(with - base);
}

struct ReductionStep {
    bool added{true};  // false: removed during the pruning sweep
    std::string attribute;
    double significance{0.0};
};

struct ReductionResult {
    std::vector<std::string> attributes;  // canonical order
    double measure_on_b{0.0};
    double measure_on_a{0.0};
    std::vector<std::pair<std::string, double>> inner_significances;  // evidence of minimality
    std::vector<ReductionStep> trace;                                 // greedy history
};

// Greedy reduction: grow B from the empty set by repeatedly adding the
// attribute with the largest outer significance (ties broken by canonical
// attribute order) until M(R_B) reaches M(R_A) within epsilon; then sweep B
// in canonical order removing any attribute whose inner significance is
// <= epsilon, recomputing after each removal, and repeat the sweep until a
// full pass removes nothing.
inline ReductionResult greedy_reduce(const InformationSystem& s, double lambda, Family family,
                                     const MeasureKind& kind, double epsilon = kDefaultEpsilon) {
    const std::vector<std::string>& all = s.attributes();
    const double measure_on_a = evaluate_measure(s, all, lambda, family, kind);

    ReductionResult result;
    result.measure_on_a = measure_on_a;
    std::vector<std::string> b;
    // Grow-until loop with do-while semantics: the bootstrap always adds one
    // attribute, even when the empty-subset convention value already matches
    // M(R_A) (as the transitive degree's does whenever R_A is transitive).
    do {
        std::string best;
        double best_sig = -1.0;
        for (const std::string& a : all) {
            if (std::find(b.begin(), b.end(), a) != b.end()) continue;
            const double sig = sig_outer(s, b, a, lambda, family, kind);
            if (sig > best_sig) {  // strict: first maximum in canonical order wins
                best_sig = sig;
                best = a;
            }
        }
        if (best.empty()) break;  // b == A already
        b.push_back(best);
        result.trace.push_back({true, best, best_sig});
    } while (std::abs(evaluate_measure(s, b, lambda, family, kind) - measure_on_a) > epsilon);

    // Pruning sweep to a fixpoint.
    bool removed_any = true;
    while (removed_any) {
        removed_any = false;
        for (const std::string& a : all) {  // canonical visiting order
            if (std::find(b.begin(), b.end(), a) == b.end()) continue;
            if (b.size() == 1) break;  // a singleton that still matches M(R_A) stays
            const double sig = sig_inner(s, b, a, lambda, family, kind);
            if (sig <= epsilon) {
                b = detail::without(b, a);
                result.trace.push_back({false, a, sig});
                removed_any = true;
            }
        }
    }

    result.attributes = detail::canonical(s, b);
    result.measure_on_b = evaluate_measure(s, result.attributes, lambda, family, kind);
    for (const std::string& a : result.attributes)
        result.inner_significances.emplace_back(
            a, sig_inner(s, result.attributes, a, lambda, family, kind));
    return result;
}

// All nonempty subsets satisfying conditions (1) and (2), in canonical
// order (by size, then lexicographic in attribute indices).  The empty set
// is excluded: it can vacuously satisfy condition (1) when M(R_A) equals the
// empty-subset convention value, but it names no attributes and is not a
// meaningful reduction.
inline std::vector<std::vector<std::string>> enumerate_reductions(
    const InformationSystem& s, double lambda, Family family, const MeasureKind& kind,
    double epsilon = kDefaultEpsilon, std::size_t max_attributes = 20) {
    const std::vector<std::string>& all = s.attributes();
    const std::size_t m = all.size();
    if (m > max_attributes)
        throw Error("enumerate_reductions: " + std::to_string(m) +
                    " attributes exceed the limit of " + std::to_string(max_attributes));
    const double measure_on_a = evaluate_measure(s, all, lambda, family, kind);

    std::vector<std::vector<std::string>> found;
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        std::vector<std::string> b;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (std::size_t(1) << j)) b.push_back(all[j]);
        if (std::abs(evaluate_measure(s, b, lambda, family, kind) - measure_on_a) > epsilon)
            continue;
        bool minimal = true;
        for (const std::string& a : b) {
            if (sig_inner(s, b, a, lambda, family, kind) <= epsilon) {
                minimal = false;
                break;
            }
        }
        if (minimal) found.push_back(std::move(b));
    }
    std::sort(found.begin(), found.end(),
              [&](const std::vector<std::string>& x, const std::vector<std::string>& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  for (std::size_t i = 0; i < x.size(); ++i) {
                      const std::size_t xi = s.attribute_index(x[i]);
                      const std::size_t yi = s.attribute_index(y[i]);
                      if (xi != yi) return xi < yi;
                  }
                  return false;
              });
    return found;
}

// ---- reduction text forms ---------------------------------------------------

inline std::string reduction_set_text(const std::vector<std::string>& attrs) {
    std::string out = "{";
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out += ",";
        out += attrs[i];
    }
    out += "}";
    return out;
}

inline std::string reduction_result_text(const ReductionResult& r, double epsilon) {
    std::ostringstream out;
    out << "reduction: " << reduction_set_text(r.attributes) << '\n';
    out << "measure-on-subset: " << format_double(r.measure_on_b) << '\n';
    out << "measure-on-all: " << format_double(r.measure_on_a) << '\n';
    out << "epsilon: " << format_double(epsilon) << '\n';
    out << "inner-significances:\n";
    for (const auto& [a, sig] : r.inner_significances)
        out << "  " << a << ": " << format_double(sig) << '\n';
    out << "trace:\n";
    for (const ReductionStep& step : r.trace)
        out << "  " << (step.added ? "add " : "drop ") << step.attribute << " (significance "
            << format_double(step.significance) << ")\n";
    return out.str();
}

}  // namespace ivrough
