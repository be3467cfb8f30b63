// Command-line front end: ad-hoc similarity/relation/measure computations,
// attribute reduction, dataset validation, and one-shot reproduction of the
// bundled reference results.
//
// Exit codes: 0 success (and reproduction within tolerance), 1 usage or
// argument parse error, 2 dataset validation error, 3 reproduction deviation
// beyond tolerance.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivrough/datasets.hpp"
#include "ivrough/info_system.hpp"
#include "ivrough/interval.hpp"
#include "ivrough/measures.hpp"
#include "ivrough/reduction.hpp"
#include "ivrough/relation.hpp"
#include "ivrough/repro.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDeviation = 3;

struct GlobalOptions {
    std::string out_dir;              // empty: print to stdout only
    std::string format = "text";      // "text" or "csv"
    double epsilon = ivrough::kDefaultEpsilon;
    std::string cd_denominator = "example3";  // or "definition5"
};

ivrough::CdDenominator cd_mode(const GlobalOptions& g) {
    if (g.cd_denominator == "example3") return ivrough::CdDenominator::neighborhood_of_b;
    if (g.cd_denominator == "definition5") return ivrough::CdDenominator::per_attribute;
    throw ivrough::Error("unknown --cd-denominator '" + g.cd_denominator +
                         "' (expected example3 or definition5)");
}

// Dataset argument: a bundled fixture name or a file path.
ivrough::InformationSystem load_dataset(const std::string& spec) {
    if (spec == "table1") return ivrough::parse_dataset(ivrough::datasets::table1_csv);
    if (spec == "face27") return ivrough::parse_dataset(ivrough::datasets::face27_csv);
    std::ifstream in(spec);
    if (!in) throw ivrough::Error("cannot open dataset file '" + spec + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return ivrough::parse_dataset(text);
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            std::string item = csv.substr(start, i - start);
            if (!item.empty()) out.push_back(item);
            start = i + 1;
        }
    }
    return out;
}

void write_or_print(const GlobalOptions& g, const std::string& filename, const std::string& content) {
    if (g.out_dir.empty()) {
        std::cout << content;
        return;
    }
    std::filesystem::create_directories(g.out_dir);
    const std::filesystem::path path = std::filesystem::path(g.out_dir) / filename;
    std::ofstream out(path);
    if (!out) throw ivrough::Error("cannot write '" + path.string() + "'");
    out << content;
    std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rough-set analysis of interval-valued information systems"};
    app.require_subcommand(1);
    app.fallthrough();  // let global options (--out, --format, ...) follow the subcommand

    GlobalOptions g;
    app.add_option("--out", g.out_dir, "Directory for output files (default: print to stdout)");
    app.add_option("--format", g.format, "Output format: text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--epsilon", g.epsilon, "Reduction measure-equality tolerance (default 1e-9)");
    app.add_option("--cd-denominator", g.cd_denominator,
                   "Cluster-degree denominator mode: example3 (neighborhood of B, default) or "
                   "definition5 (per-attribute neighborhood)")
        ->check(CLI::IsMember({"example3", "definition5"}));

    // ---- sim ----
    auto* sim = app.add_subcommand("sim", "Similarity degree of two intervals");
    std::string sim_family = "sf";
    std::string sim_u;
    std::string sim_v;
    sim->add_option("--family", sim_family, "Similarity family: sf, ss or st")->required();
    sim->add_option("u", sim_u, "First interval, as lo:hi or a bare number")->required();
    sim->add_option("v", sim_v, "Second interval")->required();

    // ---- relation ----
    auto* rel = app.add_subcommand("relation", "Lambda-similarity relation of a dataset");
    std::string rel_dataset;
    std::string rel_attrs;
    std::string rel_family = "sf";
    double rel_lambda = 0.5;
    bool rel_closure = false;
    bool rel_check = false;
    rel->add_option("dataset", rel_dataset, "Dataset file path, or bundled name (table1, face27)")
        ->required();
    rel->add_option("--attrs", rel_attrs, "Comma-separated attribute subset (default: all)");
    rel->add_option("--lambda", rel_lambda, "Similarity threshold in [0,1]")->required();
    rel->add_option("--family", rel_family, "Similarity family: sf, ss or st")->required();
    rel->add_flag("--closure", rel_closure, "Output the transitive closure instead");
    rel->add_flag("--check", rel_check, "Also print reflexive/symmetric/transitive flags");

    // ---- measure ----
    auto* mea = app.add_subcommand("measure", "Transitive or cluster degree of a relation");
    std::string mea_dataset;
    std::string mea_kind;
    std::string mea_attrs;
    std::string mea_family = "sf";
    std::string mea_sim_for_cd;
    double mea_lambda = 0.5;
    mea->add_option("dataset", mea_dataset, "Dataset file path or bundled name")->required();
    mea->add_option("--kind", mea_kind, "Measure: td (transitive degree) or cd (cluster degree)")
        ->required()
        ->check(CLI::IsMember({"td", "cd"}));
    mea->add_option("--attrs", mea_attrs, "Comma-separated attribute subset (default: all)");
    mea->add_option("--lambda", mea_lambda, "Similarity threshold in [0,1]")->required();
    mea->add_option("--family", mea_family, "Relation family: sf, ss or st")->required();
    mea->add_option("--sim-for-cd", mea_sim_for_cd,
                    "Similarity family for cluster-degree cohesion (default: same as --family)");

    // ---- approx ----
    auto* apx = app.add_subcommand("approx", "Rough approximations of an object set");
    std::string apx_dataset;
    std::string apx_attrs;
    std::string apx_family = "sf";
    std::string apx_set;
    double apx_lambda = 0.5;
    apx->add_option("dataset", apx_dataset, "Dataset file path or bundled name")->required();
    apx->add_option("--attrs", apx_attrs, "Comma-separated attribute subset (default: all)");
    apx->add_option("--lambda", apx_lambda, "Similarity threshold in [0,1]")->required();
    apx->add_option("--family", apx_family, "Similarity family: sf, ss or st")->required();
    apx->add_option("--set", apx_set, "Comma-separated target object set X")->required();

    // ---- reduce ----
    auto* red = app.add_subcommand("reduce", "Attribute reduction");
    std::string red_dataset;
    std::string red_method = "greedy";
    std::string red_kind = "td";
    std::string red_family = "sf";
    std::string red_sim_for_cd;
    double red_lambda = 0.5;
    red->add_option("dataset", red_dataset, "Dataset file path or bundled name")->required();
    red->add_option("--method", red_method, "greedy (significance-driven) or all (enumerate)")
        ->check(CLI::IsMember({"greedy", "all"}));
    red->add_option("--kind", red_kind, "Driving measure: td or cd")
        ->check(CLI::IsMember({"td", "cd"}));
    red->add_option("--lambda", red_lambda, "Similarity threshold in [0,1]")->required();
    red->add_option("--family", red_family, "Relation family: sf, ss or st")->required();
    red->add_option("--sim-for-cd", red_sim_for_cd,
                    "Similarity family for cluster-degree cohesion (default: same as --family)");

    // ---- reproduce ----
    auto* rep = app.add_subcommand("reproduce", "Recompute a bundled reference result and diff it");
    std::string rep_target;
    rep->add_option("target", rep_target,
                    "example1..example3, table3..table8, fig1..fig4, or all")
        ->required()
        ->check(CLI::IsMember({"example1", "example2", "example3", "table3", "table4", "table5",
                               "table6", "table7", "table8", "fig1", "fig2", "fig3", "fig4",
                               "all"}));

    // ---- validate ----
    auto* val = app.add_subcommand("validate", "Parse and validate a dataset file");
    std::string val_dataset;
    val->add_option("dataset", val_dataset, "Dataset file path or bundled name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sim) {
            try {
                const ivrough::Family fam = ivrough::parse_family(sim_family);
                const ivrough::Interval u = ivrough::parse_interval(sim_u);
                const ivrough::Interval v = ivrough::parse_interval(sim_v);
                // >= 12 significant digits; shortest-round-trip covers all of them.
                std::cout << ivrough::format_double(ivrough::similarity(fam, u, v)) << '\n';
                return kExitOk;
            } catch (const ivrough::Error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;  // malformed command-line value
            }
        }

        if (*val) {
            try {
                const ivrough::InformationSystem s = load_dataset(val_dataset);
                std::cout << "valid: " << s.object_count() << " objects, " << s.attribute_count()
                          << " attributes\n";
                return kExitOk;
            } catch (const ivrough::Error& e) {
                std::cerr << "invalid dataset: " << e.what() << '\n';
                return kExitValidation;
            }
        }

        if (*rel) {
            const ivrough::InformationSystem s = load_dataset(rel_dataset);
            const std::vector<std::string> attrs =
                rel_attrs.empty() ? s.attributes() : split_names(rel_attrs);
            ivrough::BinaryRelation r =
                lambda_relation(s, {attrs, rel_lambda, ivrough::parse_family(rel_family)});
            if (rel_closure) r = transitive_closure(r);
            std::string body = g.format == "csv" ? relation_pairs_text(r) : relation_matrix_text(r);
            if (rel_check) {
                const ivrough::RelationProperties p = check_properties(r);
                body += std::string("reflexive: ") + (p.reflexive ? "yes" : "no") +
                        "\nsymmetric: " + (p.symmetric ? "yes" : "no") +
                        "\ntransitive: " + (p.transitive ? "yes" : "no") + "\n";
            }
            write_or_print(g, "relation." + std::string(g.format == "csv" ? "csv" : "txt"), body);
            return kExitOk;
        }

        if (*mea) {
            const ivrough::InformationSystem s = load_dataset(mea_dataset);
            const std::vector<std::string> attrs =
                mea_attrs.empty() ? s.attributes() : split_names(mea_attrs);
            const ivrough::Family fam = ivrough::parse_family(mea_family);
            ivrough::MeasureReport report;
            if (mea_kind == "td") {
                report = transitive_degree(lambda_relation(s, {attrs, mea_lambda, fam}));
            } else {
                const ivrough::Family sim_fam =
                    mea_sim_for_cd.empty() ? fam : ivrough::parse_family(mea_sim_for_cd);
                report = cluster_degree(s, {attrs, mea_lambda, fam}, sim_fam, cd_mode(g));
            }
            const std::string body =
                g.format == "csv" ? measure_report_csv(report) : measure_report_text(report);
            write_or_print(g, "measure." + std::string(g.format == "csv" ? "csv" : "txt"), body);
            return kExitOk;
        }

        if (*apx) {
            const ivrough::InformationSystem s = load_dataset(apx_dataset);
            const std::vector<std::string> attrs =
                apx_attrs.empty() ? s.attributes() : split_names(apx_attrs);
            const ivrough::BinaryRelation r =
                lambda_relation(s, {attrs, apx_lambda, ivrough::parse_family(apx_family)});
            std::vector<bool> mask(s.object_count(), false);
            for (const std::string& name : split_names(apx_set)) mask[s.object_index(name)] = true;
            const ivrough::ApproximationReport a = approximate(r, mask);
            std::ostringstream out;
            out << "lower:";
            for (std::size_t i : a.lower) out << ' ' << s.objects()[i];
            out << "\nupper:";
            for (std::size_t i : a.upper) out << ' ' << s.objects()[i];
            out << "\naccuracy: " << ivrough::format_double(a.accuracy)
                << "\nroughness: " << ivrough::format_double(a.roughness) << '\n';
            write_or_print(g, "approx.txt", out.str());
            return kExitOk;
        }

        if (*red) {
            const ivrough::InformationSystem s = load_dataset(red_dataset);
            const ivrough::Family fam = ivrough::parse_family(red_family);
            const ivrough::Family sim_fam =
                red_sim_for_cd.empty() ? fam : ivrough::parse_family(red_sim_for_cd);
            const ivrough::MeasureKind kind = red_kind == "td"
                                                  ? ivrough::MeasureKind::td()
                                                  : ivrough::MeasureKind::cd(sim_fam, cd_mode(g));
            std::ostringstream out;
            if (red_method == "greedy") {
                const ivrough::ReductionResult r =
                    greedy_reduce(s, red_lambda, fam, kind, g.epsilon);
                out << reduction_result_text(r, g.epsilon);
            } else {
                const auto sets = enumerate_reductions(s, red_lambda, fam, kind, g.epsilon);
                const double on_all =
                    evaluate_measure(s, s.attributes(), red_lambda, fam, kind);
                for (const auto& b : sets)
                    out << ivrough::reduction_set_text(b) << " measure "
                        << ivrough::format_double(evaluate_measure(s, b, red_lambda, fam, kind))
                        << " (all: " << ivrough::format_double(on_all)
                        << ", epsilon " << ivrough::format_double(g.epsilon) << ")\n";
                if (sets.empty()) out << "no reductions found\n";
            }
            write_or_print(g, "reduce.txt", out.str());
            return kExitOk;
        }

        if (*rep) {
            ivrough::repro::Options opt;
            opt.cd_mode = cd_mode(g);
            opt.epsilon = g.epsilon;
            std::vector<std::string> targets;
            if (rep_target == "all")
                targets = ivrough::repro::kAllTargets;
            else
                targets.push_back(rep_target);
            bool all_ok = true;
            for (const std::string& target : targets) {
                const ivrough::repro::Report r = ivrough::repro::reproduce(target, opt);
                all_ok = all_ok && r.ok;
                if (!g.out_dir.empty()) {
                    write_or_print(g, r.target + ".csv", r.artifact_csv);
                    if (!r.comparison_csv.empty())
                        write_or_print(g, r.target + "_comparison.csv", r.comparison_csv);
                }
                std::cout << r.target << ":\n" << r.summary;
            }
            return all_ok ? kExitOk : kExitDeviation;
        }
    } catch (const ivrough::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
