#pragma once
// Rough approximations with accuracy/roughness, and the two relation
// measures: transitive degree (how close a relation is to transitive) and
// cluster degree (how cohesive its neighborhoods are).

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "info_system.hpp"
#include "interval.hpp"
#include "relation.hpp"

namespace ivrough {

// ---- rough approximations -------------------------------------------------

// Lower approximation: { u | R(u) subset of X }.
inline std::vector<std::size_t> lower_approx(const BinaryRelation& r, const std::vector<bool>& in_x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        bool contained = true;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r.at(i, j) && !in_x[j]) {
                contained = false;
                break;
            }
        if (contained) out.push_back(i);
    }
    return out;
}

// Upper approximation: { u | R(u) intersects X }.
inline std::vector<std::size_t> upper_approx(const BinaryRelation& r, const std::vector<bool>& in_x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        bool meets = false;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r.at(i, j) && in_x[j]) {
                meets = true;
                break;
            }
        if (meets) out.push_back(i);
    }
    return out;
}

struct ApproximationReport {
    std::vector<std::size_t> lower;
    std::vector<std::size_t> upper;
    double accuracy{0.0};   // |lower| / |upper|
    double roughness{0.0};  // 1 - accuracy
};

// Accuracy is |lower|/|upper|; X must be nonempty so that (for a reflexive
// relation) the upper approximation is nonempty and the ratio is defined.
inline ApproximationReport approximate(const BinaryRelation& r, const std::vector<bool>& in_x) {
    if (!r.reflexive()) throw Error("approximate: relation must be reflexive");
    bool any = false;
    for (bool b : in_x) any = any || b;
    if (!any) throw Error("approximate: target set is empty");
    ApproximationReport rep;
    rep.lower = lower_approx(r, in_x);
    rep.upper = upper_approx(r, in_x);
    rep.accuracy = static_cast<double>(rep.lower.size()) / static_cast<double>(rep.upper.size());
    rep.roughness = 1.0 - rep.accuracy;
    return rep;
}

// ---- measure reports -------------------------------------------------------

enum class MeasureTag { transitive_degree, cluster_degree };

struct MeasureReport {
    MeasureTag kind{MeasureTag::transitive_degree};
    std::vector<std::string> objects;
    std::vector<double> per_object;
    double aggregate{0.0};  // arithmetic mean of per_object
};

// ---- transitive degree ------------------------------------------------------

// Per object: |R(x)| / |t(R)(x)|; aggregate: mean over the universe.  The
// value is 1 exactly when the relation is already transitive (the closure
// adds nothing), and integer counts make that equality exact in doubles.
inline MeasureReport transitive_degree(const BinaryRelation& r) {
    if (!r.reflexive()) throw Error("transitive_degree: relation must be reflexive");
    const BinaryRelation t = transitive_closure(r);
    MeasureReport rep;
    rep.kind = MeasureTag::transitive_degree;
    rep.objects = r.object_ids();
    if (rep.objects.empty()) rep.objects.resize(r.size());
    rep.per_object.reserve(r.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double v = static_cast<double>(r.row_count_bits(i)) /
                         static_cast<double>(t.row_count_bits(i));
        rep.per_object.push_back(v);
        sum += v;
    }
    rep.aggregate = sum / static_cast<double>(r.size());
    return rep;
}

// Exact-rational aggregate of the transitive degree, for equality-sensitive
// comparisons: returns the pair (numerator, denominator) of the mean of
// |R(x)|/|t(R)(x)| in lowest terms, computed in integer arithmetic.
inline std::pair<long long, long long> transitive_degree_exact(const BinaryRelation& r) {
    if (!r.reflexive()) throw Error("transitive_degree_exact: relation must be reflexive");
    // The reduced running denominator divides lcm(1..n) * n, which fits a
    // 64-bit integer for n <= 42; beyond that use the double-precision form.
    if (r.size() > 42) throw Error("transitive_degree_exact: universe too large for exact arithmetic");
    const BinaryRelation t = transitive_closure(r);
    long long num = 0;  // running sum num/den
    long long den = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const long long a = static_cast<long long>(r.row_count_bits(i));
        const long long b = static_cast<long long>(t.row_count_bits(i));
        num = num * b + a * den;
        den *= b;
        const long long g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    den *= static_cast<long long>(r.size());
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

// ---- cluster degree ---------------------------------------------------------

// Which denominator the per-attribute cohesion term divides by.  The
// `neighborhood_of_b` mode divides by |R_B(x)| (the size of the neighborhood
// the values were drawn from, which is also the number of summands); the
// `per_attribute` mode divides by |R_a(x)|, the single-attribute
// neighborhood size.  The first is the default; the second is kept as an
// explicit comparison mode.
enum class CdDenominator { neighborhood_of_b, per_attribute };

// Cluster degree of the relation named by `spec`, using `sim_for_cd` to
// compare member values with the neighborhood's mean interval:
//   per object x:  (1/|B|) * sum over a in B of
//                  [ sum over y in R_B(x) of S(f(y,a), mean) ] / denominator
// where mean is the element-wise average of { f(y,a) | y in R_B(x) } taken
// with multiplicity.  Aggregate: mean over the universe.
inline MeasureReport cluster_degree(const InformationSystem& s, const RelationSpec& spec,
                                    Family sim_for_cd,
                                    CdDenominator mode = CdDenominator::neighborhood_of_b) {
    if (spec.attributes.empty()) throw Error("cluster_degree: attribute subset must be nonempty");
    const BinaryRelation rb = lambda_relation(s, spec);
    std::vector<std::size_t> cols;
    cols.reserve(spec.attributes.size());
    for (const std::string& name : spec.attributes) cols.push_back(s.attribute_index(name));

    MeasureReport rep;
    rep.kind = MeasureTag::cluster_degree;
    rep.objects = s.objects();
    rep.per_object.reserve(s.object_count());
    double total = 0.0;
    for (std::size_t x = 0; x < s.object_count(); ++x) {
        const std::vector<std::size_t> members = rb.row(x);
        double over_attrs = 0.0;
        for (std::size_t c : cols) {
            std::vector<Interval> values;
            values.reserve(members.size());
            for (std::size_t y : members) values.push_back(s.cell(y, c));
            const Interval mean = mean_interval(values);
            double cohesion = 0.0;
            for (const Interval& v : values) cohesion += similarity(sim_for_cd, v, mean);
            double denom = static_cast<double>(members.size());
            if (mode == CdDenominator::per_attribute) {
                RelationSpec single{{s.attributes()[c]}, spec.lambda, spec.family};
                const BinaryRelation ra = lambda_relation(s, single);
                denom = static_cast<double>(ra.row_count_bits(x));
            }
            over_attrs += cohesion / denom;
        }
        const double v = over_attrs / static_cast<double>(cols.size());
        rep.per_object.push_back(v);
        total += v;
    }
    rep.aggregate = total / static_cast<double>(s.object_count());
    return rep;
}

// Single (object, attribute) cohesion term of the cluster degree, exposed
// because it is a useful diagnostic intermediate.
inline double cluster_degree_term(const InformationSystem& s, const RelationSpec& spec,
                                  Family sim_for_cd, std::string_view object,
                                  std::string_view attribute,
                                  CdDenominator mode = CdDenominator::neighborhood_of_b) {
    const BinaryRelation rb = lambda_relation(s, spec);
    const std::size_t x = s.object_index(object);
    const std::size_t c = s.attribute_index(attribute);
    const std::vector<std::size_t> members = rb.row(x);
    std::vector<Interval> values;
    values.reserve(members.size());
    for (std::size_t y : members) values.push_back(s.cell(y, c));
    const Interval mean = mean_interval(values);
    double cohesion = 0.0;
    for (const Interval& v : values) cohesion += similarity(sim_for_cd, v, mean);
    double denom = static_cast<double>(members.size());
    if (mode == CdDenominator::per_attribute) {
        RelationSpec single{{s.attributes()[c]}, spec.lambda, spec.family};
        denom = static_cast<double>(lambda_relation(s, single).row_count_bits(x));
    }
    return cohesion / denom;
}

// Mean interval of one attribute over a neighborhood (diagnostic intermediate).
inline Interval neighborhood_mean(const InformationSystem& s, const RelationSpec& spec,
                                  std::string_view object, std::string_view attribute) {
    const BinaryRelation rb = lambda_relation(s, spec);
    const std::size_t x = s.object_index(object);
    const std::size_t c = s.attribute_index(attribute);
    std::vector<Interval> values;
    for (std::size_t y : rb.row(x)) values.push_back(s.cell(y, c));
    return mean_interval(values);
}

// ---- report serialization ---------------------------------------------------

inline std::string measure_report_text(const MeasureReport& rep) {
    std::ostringstream out;
    out << "kind: " << (rep.kind == MeasureTag::transitive_degree ? "transitive-degree" : "cluster-degree")
        << '\n';
    out << "per-object:\n";
    for (std::size_t i = 0; i < rep.per_object.size(); ++i)
        out << "  " << rep.objects[i] << ": " << format_double(rep.per_object[i]) << '\n';
    out << "aggregate: " << format_double(rep.aggregate) << '\n';
    return out.str();
}

inline std::string measure_report_csv(const MeasureReport& rep) {
    std::ostringstream out;
    out << "object,value\n";
    for (std::size_t i = 0; i < rep.per_object.size(); ++i)
        out << rep.objects[i] << ',' << format_double(rep.per_object[i]) << '\n';
    out << "aggregate," << format_double(rep.aggregate) << '\n';
    return out.str();
}

}  // namespace ivrough
