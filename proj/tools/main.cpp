#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rdfdelta/pipeline.hpp"

using namespace rdfdelta;

int main(int argc, char** argv) {
    CLI::App app{"RDF dataset change detection: diff two versions, detect "
                 "catalog and user-defined changes, emit the ontology of changes"};
    app.require_subcommand(1);

    const std::map<std::string, CatalogId> models{{"rdf", CatalogId::RdfModel},
                                                  {"qb", CatalogId::DataCube}};

    RunConfig detect_cfg;
    CLI::App* detect = app.add_subcommand("detect", "Diff two version files");
    detect->add_option("--old", detect_cfg.old_path, "Old version (N-Triples)")
        ->required();
    detect->add_option("--new", detect_cfg.new_path, "New version (N-Triples)")
        ->required();
    detect
        ->add_option("--model", detect_cfg.model, "Built-in catalog: rdf or qb")
        ->required()
        ->transform(CLI::CheckedTransformer(models, CLI::ignore_case));
    detect->add_option("--complex", detect_cfg.complex_defs_path,
                       "Complex-change definitions (JSON)");
    detect->add_option("--assoc", detect_cfg.associations_path,
                       "Ground associations (JSON)");
    detect->add_option("--out", detect_cfg.ontology_out_path, "Ontology output (N-Triples)")
        ->required();
    detect->add_option("--report", detect_cfg.report_out_path, "Report output (JSON)")
        ->required();
    detect->add_option("--threads", detect_cfg.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    detect->add_flag("--timings", detect_cfg.timings, "Include timings in the report");
    detect->add_flag("--strict", detect_cfg.strict,
                     "Exit 2 when diagnostics are present");

    CheckConfig check_cfg;
    CLI::App* check =
        app.add_subcommand("check", "Randomized completeness/unambiguity checks");
    check->add_option("--model", check_cfg.model, "Built-in catalog: rdf or qb")
        ->required()
        ->transform(CLI::CheckedTransformer(models, CLI::ignore_case));
    check->add_option("--trials", check_cfg.trials, "Number of random pairs")
        ->required();
    check->add_option("--seed", check_cfg.seed, "Random seed");
    check->add_option("--mutations", check_cfg.mutations, "Delta mutations per pair");
    check->add_option("--threads", check_cfg.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    check->add_flag("--inject-duplicate", check_cfg.inject_duplicate,
                    "Clone a change definition to demonstrate ambiguity detection");

    BenchConfig bench_cfg;
    CLI::App* bench = app.add_subcommand("bench", "Scaling grid benchmark");
    bench->add_option("--sizes", bench_cfg.sizes, "Unchanged-dataset sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--deltas", bench_cfg.deltas, "Delta sizes (label additions)")
        ->required()
        ->delimiter(',');
    bench->add_option("--model", bench_cfg.model, "Built-in catalog: rdf or qb")
        ->required()
        ->transform(CLI::CheckedTransformer(models, CLI::ignore_case));
    bench->add_option("--out", bench_cfg.csv_out, "CSV output path");
    bench->add_option("--seed", bench_cfg.seed, "Random seed");
    bench->add_option("--threads", bench_cfg.threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (detect->parsed()) return run_detect(detect_cfg, std::cerr);
    if (check->parsed()) return run_check(check_cfg, std::cout);
    return run_bench(bench_cfg, std::cout);
}
