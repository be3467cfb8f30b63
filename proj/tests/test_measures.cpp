// Rough approximations, transitive degree and cluster degree.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "ivrough/datasets.hpp"
#include "ivrough/measures.hpp"
#include "ivrough/reference.hpp"
#include "oracle.hpp"

using Catch::Matchers::WithinAbs;
using ivrough::BinaryRelation;
using ivrough::CdDenominator;
using ivrough::Family;
using ivrough::InformationSystem;
using ivrough::Interval;
using ivrough::RelationSpec;

namespace {

const InformationSystem& table1() {
    static const InformationSystem s = ivrough::parse_dataset(ivrough::datasets::table1_csv);
    return s;
}

const std::vector<std::string> kB{"a1", "a2", "a3"};

std::vector<bool> mask(const InformationSystem& s, const std::vector<std::string>& names) {
    std::vector<bool> m(s.object_count(), false);
    for (const auto& n : names) m[s.object_index(n)] = true;
    return m;
}

InformationSystem random_system(std::mt19937& rng, std::size_t objects, std::size_t attrs) {
    std::uniform_int_distribution<int> grid(0, 256);
    std::vector<std::string> ids;
    std::vector<std::string> names;
    std::vector<Interval> cells;
    for (std::size_t i = 0; i < objects; ++i) ids.push_back("u" + std::to_string(i + 1));
    for (std::size_t j = 0; j < attrs; ++j) names.push_back("c" + std::to_string(j + 1));
    for (std::size_t i = 0; i < objects; ++i)
        for (std::size_t j = 0; j < attrs; ++j) {
            int a = grid(rng);
            int b = grid(rng);
            if (a > b) std::swap(a, b);
            cells.emplace_back(a / 64.0, b / 64.0);
        }
    return InformationSystem(std::move(ids), std::move(names), std::move(cells));
}

BinaryRelation random_reflexive_relation(std::mt19937& rng, std::size_t n) {
    std::bernoulli_distribution edge(0.4);
    BinaryRelation r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j || edge(rng)) r.set(i, j);
    return r;
}

}  // namespace

TEST_CASE("approximations of X = {x2,x3} in the 5x4 dataset") {
    const auto& s = table1();
    const std::vector<bool> in_x = mask(s, {"x2", "x3"});

    const auto rf = ivrough::approximate(ivrough::lambda_relation(s, {kB, 0.6, Family::SF}), in_x);
    CHECK(rf.lower == std::vector<std::size_t>{1, 2});
    CHECK(rf.upper == std::vector<std::size_t>{1, 2});
    CHECK(rf.accuracy == 1.0);  // equal integer counts divide exactly
    CHECK(rf.roughness == 0.0);

    const auto rs = ivrough::approximate(ivrough::lambda_relation(s, {kB, 0.6, Family::SS}), in_x);
    CHECK(rs.lower.empty());
    CHECK(rs.upper.size() == 5);
    CHECK(rs.accuracy == 0.0);
    CHECK(rs.roughness == 1.0);

    const auto rt = ivrough::approximate(ivrough::lambda_relation(s, {kB, 0.6, Family::ST}), in_x);
    CHECK(rt.lower.empty());
    CHECK(rt.upper == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(rt.accuracy == 0.0);
}

TEST_CASE("approximation preconditions and trivial cases") {
    const auto& s = table1();
    const BinaryRelation r = ivrough::lambda_relation(s, {kB, 0.6, Family::SS});

    CHECK_THROWS_AS(ivrough::approximate(r, std::vector<bool>(5, false)), ivrough::Error);

    BinaryRelation bare(5);
    CHECK_THROWS_AS(ivrough::approximate(bare, mask(s, {"x1"})), ivrough::Error);

    // X = U: both approximations are U, accuracy 1.
    const auto whole = ivrough::approximate(r, std::vector<bool>(5, true));
    CHECK(whole.lower.size() == 5);
    CHECK(whole.upper.size() == 5);
    CHECK(whole.accuracy == 1.0);
}

TEST_CASE("lower approximation is contained in X, X in upper, monotone in relation") {
    std::mt19937 rng(31415);
    const auto& s = table1();
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<bool> in_x(5, false);
        bool any = false;
        for (std::size_t i = 0; i < 5; ++i) {
            in_x[i] = rng() & 1;
            any = any || in_x[i];
        }
        if (!any) in_x[rng() % 5] = true;

        const auto rf = ivrough::approximate(ivrough::lambda_relation(s, {kB, 0.6, Family::SF}), in_x);
        const auto rt = ivrough::approximate(ivrough::lambda_relation(s, {kB, 0.6, Family::ST}), in_x);
        const auto rs = ivrough::approximate(ivrough::lambda_relation(s, {kB, 0.6, Family::SS}), in_x);

        for (const auto* rep : {&rf, &rt, &rs}) {
            for (std::size_t i : rep->lower) REQUIRE(in_x[i]);  // lower subset of X (reflexive)
            for (std::size_t i = 0; i < 5; ++i)
                if (in_x[i])  // X subset of upper (reflexive)
                    REQUIRE(std::find(rep->upper.begin(), rep->upper.end(), i) != rep->upper.end());
        }

        // Accuracy ordering: coarser relation, lower accuracy.
        REQUIRE(rs.accuracy <= rt.accuracy + 1e-15);
        REQUIRE(rt.accuracy <= rf.accuracy + 1e-15);
    }
}

TEST_CASE("transitive degrees of the 5x4 dataset at threshold 0.6") {
    const auto& s = table1();
    const auto td = [&](Family f) {
        return ivrough::transitive_degree(ivrough::lambda_relation(s, {kB, 0.6, f}));
    };

    const auto rf = td(Family::SF);
    CHECK(rf.aggregate == 1.0);  // already transitive: exact by integer counts
    for (double v : rf.per_object) CHECK(v == 1.0);

    const auto rs = td(Family::SS);
    CHECK_THAT(rs.aggregate, WithinAbs(0.68, 1e-12));

    const auto rt = td(Family::ST);
    CHECK_THAT(rt.aggregate, WithinAbs(0.7, 1e-12));

    // The same quantities in exact integer arithmetic, in lowest terms.
    using Pair = std::pair<long long, long long>;
    CHECK(ivrough::transitive_degree_exact(ivrough::lambda_relation(s, {kB, 0.6, Family::SF})) ==
          Pair{1, 1});
    CHECK(ivrough::transitive_degree_exact(ivrough::lambda_relation(s, {kB, 0.6, Family::SS})) ==
          Pair{17, 25});
    CHECK(ivrough::transitive_degree_exact(ivrough::lambda_relation(s, {kB, 0.6, Family::ST})) ==
          Pair{7, 10});
}

TEST_CASE("transitive degree preconditions and guards") {
    BinaryRelation not_reflexive(3);
    CHECK_THROWS_AS(ivrough::transitive_degree(not_reflexive), ivrough::Error);
    CHECK_THROWS_AS(ivrough::transitive_degree_exact(not_reflexive), ivrough::Error);

    BinaryRelation big(43);
    for (std::size_t i = 0; i < 43; ++i) big.set(i, i);
    CHECK_THROWS_AS(ivrough::transitive_degree_exact(big), ivrough::Error);
    CHECK(ivrough::transitive_degree(big).aggregate == 1.0);  // double form still works
}

TEST_CASE("degree one exactly characterizes transitivity (exhaustive, n <= 4)") {
    for (unsigned n : {3u, 4u}) {
        const unsigned off_diag = n * (n - 1);
        for (unsigned mask_bits = 0; mask_bits < (1u << off_diag); ++mask_bits) {
            BinaryRelation r(n);
            unsigned bit = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j)
                        r.set(i, j);
                    else if (mask_bits & (1u << bit++))
                        r.set(i, j);
                }
            const double td = ivrough::transitive_degree(r).aggregate;
            REQUIRE((td == 1.0) == r.transitive());
            REQUIRE(td > 0.0);
            REQUIRE(td <= 1.0);
        }
    }
}

TEST_CASE("transitive degree agrees with the exact-rational recomputation") {
    std::mt19937 rng(616);
    for (int trial = 0; trial < 300; ++trial) {
        const BinaryRelation r = random_reflexive_relation(rng, 2 + trial % 8);
        const double mine = ivrough::transitive_degree(r).aggregate;
        const double exact = oracle::to_double(oracle::transitive_degree(oracle::from_relation(r)));
        REQUIRE_THAT(mine, WithinAbs(exact, 1e-12));

        const auto [num, den] = ivrough::transitive_degree_exact(r);
        const oracle::Rat exact_rat = oracle::transitive_degree(oracle::from_relation(r));
        REQUIRE(oracle::Rat(num) / oracle::Rat(den) == exact_rat);
    }
}

TEST_CASE("adding an edge already implied by the closure never lowers the degree") {
    std::mt19937 rng(999);
    int exercised = 0;
    for (int trial = 0; trial < 400 && exercised < 100; ++trial) {
        const BinaryRelation r = random_reflexive_relation(rng, 3 + trial % 6);
        const BinaryRelation t = ivrough::transitive_closure(r);
        if (t == r) continue;
        // Find one pair in t but not in r and add it.
        BinaryRelation r2 = r;
        bool added = false;
        for (std::size_t i = 0; i < r.size() && !added; ++i)
            for (std::size_t j = 0; j < r.size() && !added; ++j)
                if (t.at(i, j) && !r.at(i, j)) {
                    r2.set(i, j);
                    added = true;
                }
        REQUIRE(added);
        REQUIRE(ivrough::transitive_closure(r2) == t);  // same closure
        REQUIRE(ivrough::transitive_degree(r2).aggregate >= ivrough::transitive_degree(r).aggregate);
        ++exercised;
    }
    REQUIRE(exercised == 100);
}

TEST_CASE("cluster degrees of the 5x4 dataset at threshold 0.6") {
    const auto& s = table1();

    // The identity relation clusters perfectly: every neighborhood is a
    // singleton whose mean is its own value.
    const auto rf = ivrough::cluster_degree(s, {kB, 0.6, Family::SF}, Family::SF);
    CHECK(rf.aggregate == 1.0);
    for (double v : rf.per_object) CHECK(v == 1.0);

    // Frozen values, cross-checked below against exact arithmetic.
    const auto rs = ivrough::cluster_degree(s, {kB, 0.6, Family::SS}, Family::SS);
    CHECK_THAT(rs.aggregate, WithinAbs(0.830764, 5e-6));

    const auto rt = ivrough::cluster_degree(s, {kB, 0.6, Family::ST}, Family::ST);
    CHECK_THAT(rt.aggregate, WithinAbs(0.912178, 5e-6));

    // Aggregate is the mean of the per-object values.
    double sum = 0.0;
    for (double v : rs.per_object) sum += v;
    CHECK_THAT(rs.aggregate, WithinAbs(sum / 5.0, 1e-15));

    // Exact-rational cross-checks of both aggregates.
    CHECK_THAT(rs.aggregate,
               WithinAbs(oracle::to_double(oracle::cluster_degree(s, kB, 0.6, Family::SS, Family::SS)),
                         1e-12));
    CHECK_THAT(rt.aggregate,
               WithinAbs(oracle::to_double(oracle::cluster_degree(s, kB, 0.6, Family::ST, Family::ST)),
                         1e-12));
}

TEST_CASE("cluster degree intermediates at (x1, a1)") {
    const auto& s = table1();
    const RelationSpec spec{kB, 0.6, Family::SS};

    // Mean of a1 over the endpoint-displacement neighborhood of x1.
    const Interval mean = ivrough::neighborhood_mean(s, spec, "x1", "a1");
    CHECK_THAT(mean.lo, WithinAbs(0.075, 1e-12));
    CHECK_THAT(mean.hi, WithinAbs(0.7, 1e-12));

    // Cohesion term at (x1, a1).
    const double term = ivrough::cluster_degree_term(s, spec, Family::SS, "x1", "a1");
    CHECK_THAT(term, WithinAbs(0.846147, 5e-6));
}

TEST_CASE("the alternative per-attribute denominator mode") {
    const auto& s = table1();
    const auto rs = ivrough::cluster_degree(s, {kB, 0.6, Family::SS}, Family::SS,
                                            CdDenominator::per_attribute);
    const double exact = oracle::to_double(
        oracle::cluster_degree(s, kB, 0.6, Family::SS, Family::SS, /*per_attribute=*/true));
    CHECK_THAT(rs.aggregate, WithinAbs(exact, 1e-12));

    // The default mode differs from it on this dataset (single-attribute
    // neighborhoods are generally wider than the joint one).
    const auto def = ivrough::cluster_degree(s, {kB, 0.6, Family::SS}, Family::SS);
    CHECK(std::abs(def.aggregate - rs.aggregate) > 1e-6);
}

TEST_CASE("cluster degree agrees with the exact-rational recomputation") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 40; ++trial) {
        const InformationSystem s = random_system(rng, 3 + trial % 8, 1 + trial % 3);
        std::uniform_int_distribution<int> grid(0, 64);
        const double lam = grid(rng) / 64.0;
        for (Family f : {Family::SF, Family::SS, Family::ST}) {
            const double mine = ivrough::cluster_degree(s, {s.attributes(), lam, f}, f).aggregate;
            const double exact =
                oracle::to_double(oracle::cluster_degree(s, s.attributes(), lam, f, f));
            REQUIRE_THAT(mine, WithinAbs(exact, 1e-12));
        }
    }
}

TEST_CASE("identical objects cluster perfectly; a perturbed object breaks it") {
    // Four identical rows: the complete relation, means equal to the common
    // value, similarity 1 everywhere, so the degree is exactly 1.
    std::vector<ivrough::Interval> cells(4 * 2, Interval(0.2, 0.4));
    const InformationSystem same({"u1", "u2", "u3", "u4"}, {"c1", "c2"}, cells);
    const auto cd = ivrough::cluster_degree(same, {{"c1", "c2"}, 0.5, Family::SS}, Family::SS);
    CHECK(cd.aggregate == 1.0);

    // Shift one cell by 0.1: at threshold 0.5 everything stays related, but
    // the neighborhood is no longer homogeneous, so the degree drops below 1.
    cells[3 * 2 + 1] = Interval(0.3, 0.5);
    const InformationSystem bumped({"u1", "u2", "u3", "u4"}, {"c1", "c2"}, cells);
    const BinaryRelation r = ivrough::lambda_relation(bumped, {{"c1", "c2"}, 0.5, Family::SS});
    for (std::size_t i = 0; i < 4; ++i) REQUIRE(r.row_count_bits(i) == 4);  // still complete
    const auto cd2 = ivrough::cluster_degree(bumped, {{"c1", "c2"}, 0.5, Family::SS}, Family::SS);
    CHECK(cd2.aggregate < 1.0);
    CHECK(cd2.aggregate > 0.0);
}

TEST_CASE("degree bounds hold on random systems") {
    std::mt19937 rng(8080);
    for (int trial = 0; trial < 30; ++trial) {
        const InformationSystem s = random_system(rng, 3 + trial % 7, 2);
        std::uniform_int_distribution<int> grid(0, 64);
        const double lam = grid(rng) / 64.0;
        for (Family f : {Family::SF, Family::SS, Family::ST}) {
            const auto td = ivrough::transitive_degree(ivrough::lambda_relation(s, {s.attributes(), lam, f}));
            REQUIRE(td.aggregate > 0.0);
            REQUIRE(td.aggregate <= 1.0);
            for (double v : td.per_object) {
                REQUIRE(v > 0.0);
                REQUIRE(v <= 1.0);
            }
            const auto cd = ivrough::cluster_degree(s, {s.attributes(), lam, f}, f);
            REQUIRE(cd.aggregate >= 0.0);
            REQUIRE(cd.aggregate <= 1.0 + 1e-15);
            for (double v : cd.per_object) {
                REQUIRE(v >= 0.0);
                REQUIRE(v <= 1.0 + 1e-15);
            }
        }
    }
}

TEST_CASE("cluster degree requires a nonempty attribute subset") {
    const auto& s = table1();
    CHECK_THROWS_AS(ivrough::cluster_degree(s, {{}, 0.6, Family::SS}, Family::SS), ivrough::Error);
}

TEST_CASE("measure report serialization") {
    const auto& s = table1();
    const auto rep = ivrough::transitive_degree(ivrough::lambda_relation(s, {kB, 0.6, Family::SF}));
    const std::string text = ivrough::measure_report_text(rep);
    CHECK(text.find("transitive-degree") != std::string::npos);
    CHECK(text.find("x1: 1") != std::string::npos);
    CHECK(text.find("aggregate: 1") != std::string::npos);
    const std::string csv = ivrough::measure_report_csv(rep);
    CHECK(csv.find("object,value") == 0);
    CHECK(csv.find("aggregate,1") != std::string::npos);
}
