#include "rdfdelta/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include <json.hpp>

#include "rdfdelta/json_defs.hpp"
#include "rdfdelta/ntriples.hpp"
#include "rdfdelta/ontology.hpp"
#include "rdfdelta/synth.hpp"
#include "rdfdelta/vocab.hpp"

namespace rdfdelta {
namespace {

using ordered_json = nlohmann::ordered_json;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string file_stem(const std::string& path) {
    std::string stem = std::filesystem::path(path).stem().string();
    return stem.empty() ? path : stem;
}

Dataset load_version(const std::string& path, const TermTablePtr& table) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open version file: " + path);
    return parse_ntriples(in, table, file_stem(path));
}

std::string triple_line(const Triple& t, const TermTable& table) {
    return table.ntriples(t.s) + " " + table.ntriples(t.p) + " " + table.ntriples(t.o) +
           " .";
}

struct DetectOutcome {
    DetectionReport report;
    std::size_t schema_triples = 0;
    std::size_t instance_triples = 0;
    std::size_t added = 0;
    std::size_t deleted = 0;
    std::pair<std::string, std::string> versions;
};

// The two-phase §5 pipeline over already-loaded versions: simple detection,
// ontology materialization, complex detection, final canonical ontology write.
DetectOutcome detect_into(const ChangeLanguage& lang, const AssociationStore& assoc,
                          std::shared_ptr<const Dataset> old_v,
                          std::shared_ptr<const Dataset> new_v,
                          const std::string& ontology_out, unsigned threads,
                          double* prep_seconds = nullptr) {
    DetectOutcome out;
    out.versions = {old_v->label(), new_v->label()};
    const TermTablePtr table = new_v->table();

    auto t_prep = std::chrono::steady_clock::now();
    EvalContext ctx = EvalContext::make(std::move(old_v), std::move(new_v));
    if (prep_seconds) *prep_seconds = seconds_since(t_prep);
    out.added = ctx.added->size();
    out.deleted = ctx.deleted->size();
    const LowLevelDelta delta{*ctx.added, *ctx.deleted};

    DetectionReport& rep = out.report;
    auto t0 = std::chrono::steady_clock::now();
    SimpleDetectionResult simple = detect_simple(lang, ctx, threads);
    rep.simple_detected = std::move(simple.detected);
    rep.consumption.triple_consumers = std::move(simple.consumption.triple_consumers);
    rep.unconsumed_delta = check_completeness(rep.consumption, delta);
    rep.ambiguous_delta = check_unambiguity(rep.consumption, delta);

    ChangesOntology store(table);
    store.set_schema(emit_schema(lang));
    Dataset batch1;
    {
        DatasetBuilder b(table);
        ConsumptionMap simple_only;  // co:consumes edges appear on complex only
        b.add_all(emit_detections(rep.simple_detected, simple_only, lang));
        b.add_all(emit_associations(assoc, out.versions, table));
        batch1 = std::move(b).build("batch1");
    }
    rep.creation_seconds += seconds_since(t0);

    IngestStats s1 = ingest(batch1, ontology_out, store);
    rep.creation_seconds += s1.write_seconds;
    rep.ingestion_seconds += s1.merge_seconds;

    if (!lang.complex().empty()) {
        EvalContext ctx2 = ctx;
        ctx2.ontology = std::make_shared<const Dataset>(store.combined());
        auto t1 = std::chrono::steady_clock::now();
        ComplexDetectionResult complex = detect_complex(lang, ctx2, assoc, threads);
        rep.complex_detected = std::move(complex.detected);
        rep.consumption.simple_consumers = std::move(complex.simple_consumers);
        rep.warnings = std::move(complex.warnings);
        Dataset batch2 = emit_detections(rep.complex_detected, rep.consumption, lang);
        rep.creation_seconds += seconds_since(t1);

        IngestStats s2 = ingest(batch2, ontology_out, store);
        rep.creation_seconds += s2.write_seconds;
        rep.ingestion_seconds += s2.merge_seconds;
    }

    // Final artifact: the full ontology (schema + instances), canonical form.
    {
        std::ofstream sink(ontology_out, std::ios::binary);
        if (!sink) throw IoError("cannot open ontology output: " + ontology_out);
        serialize_ntriples(store.combined(), sink);
        if (!sink) throw IoError("write failed: " + ontology_out);
    }
    out.schema_triples = store.schema().size();
    out.instance_triples = store.instances().size();

    for (const auto& inst : rep.simple_detected) ++rep.counts[inst.change_name];
    for (const auto& inst : rep.complex_detected) ++rep.counts[inst.change_name];
    return out;
}

ordered_json report_json(const DetectOutcome& out, const TermTable& table,
                         bool timings) {
    const DetectionReport& rep = out.report;
    ordered_json j;
    j["old_version"] = out.versions.first;
    j["new_version"] = out.versions.second;
    j["delta"] = {{"added", out.added}, {"deleted", out.deleted}};
    ordered_json counts = ordered_json::object();
    for (const auto& [name, n] : rep.counts) counts[name] = n;
    j["counts"] = std::move(counts);
    auto canonicals = [](const std::set<ChangeInstantiation>& s) {
        ordered_json a = ordered_json::array();
        for (const auto& i : s) a.push_back(i.canonical);
        return a;
    };
    j["simple_detected"] = canonicals(rep.simple_detected);
    j["complex_detected"] = canonicals(rep.complex_detected);
    ordered_json diag;
    ordered_json unconsumed = ordered_json::array();
    for (const Triple& t : rep.unconsumed_delta)
        unconsumed.push_back(triple_line(t, table));
    diag["unconsumed_delta"] = std::move(unconsumed);
    ordered_json ambiguous = ordered_json::object();
    for (const auto& [t, consumers] : rep.ambiguous_delta) {
        ordered_json names = ordered_json::array();
        for (const auto& c : consumers) names.push_back(c.canonical);
        ambiguous[triple_line(t, table)] = std::move(names);
    }
    diag["ambiguous_delta"] = std::move(ambiguous);
    diag["warnings"] = rep.warnings;
    j["diagnostics"] = std::move(diag);
    j["ontology"] = {{"schema_triples", out.schema_triples},
                     {"instance_triples", out.instance_triples}};
    if (timings)
        j["timings"] = {{"creation_seconds", rep.creation_seconds},
                        {"ingestion_seconds", rep.ingestion_seconds}};
    return j;
}

}  // namespace

int run_detect(const RunConfig& config, std::ostream& err) {
    try {
        auto table = std::make_shared<TermTable>();
        auto old_v = std::make_shared<const Dataset>(load_version(config.old_path, table));
        auto new_v = std::make_shared<const Dataset>(load_version(config.new_path, table));

        ChangeLanguage lang = make_catalog(config.model, table);
        if (!config.complex_defs_path.empty())
            load_complex_defs_file(config.complex_defs_path, lang);
        AssociationStore assoc;
        if (!config.associations_path.empty())
            assoc = load_associations_file(config.associations_path, *table);

        DetectOutcome out =
            detect_into(lang, assoc, std::move(old_v), std::move(new_v),
                        config.ontology_out_path, std::max(1u, config.threads));

        if (!config.report_out_path.empty()) {
            std::ofstream rout(config.report_out_path, std::ios::binary);
            if (!rout) throw IoError("cannot open report output: " + config.report_out_path);
            rout << report_json(out, *table, config.timings).dump(2) << "\n";
            if (!rout) throw IoError("write failed: " + config.report_out_path);
        }

        const DetectionReport& rep = out.report;
        bool diagnostics = !rep.unconsumed_delta.empty() ||
                           !rep.ambiguous_delta.empty() || !rep.warnings.empty();
        return config.strict && diagnostics ? kExitDiagnostics : kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DefsParseError& e) {
        err << "definitions error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ChangeError& e) {
        err << "definitions error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
}

CheckOutcome run_check_trials(const CheckConfig& config, std::ostream& out) {
    CheckOutcome outcome;
    outcome.trials = config.trials;
    std::mt19937_64 seeds(config.seed);
    constexpr std::size_t kMaxReported = 20;
    std::size_t reported = 0;

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t trial_seed = seeds();
        auto table = std::make_shared<TermTable>();
        ChangeLanguage lang = make_catalog(config.model, table);
        if (config.inject_duplicate) {
            // A second change with Add_Label's exact shape: every label
            // addition then has two distinct consumers.
            SimpleChangeDef dup;
            dup.name = "Add_Label_Copy";
            dup.params = {Variable{"s"}, Variable{"o"}};
            dup.delta_plus = {{Variable{"s"},
                               PatternTerm{table->intern_uri(vocab::kRdfsLabel)},
                               Variable{"o"}}};
            lang.register_simple(std::move(dup));
        }
        synth::VersionPair pair =
            synth::random_pair(config.model, trial_seed, table, config.mutations);
        EvalContext ctx = EvalContext::make(pair.old_v, pair.new_v);
        const LowLevelDelta delta{*ctx.added, *ctx.deleted};

        SimpleDetectionResult simple = detect_simple(lang, ctx, config.threads);
        auto unconsumed = check_completeness(simple.consumption, delta);
        auto ambiguous = check_unambiguity(simple.consumption, delta);
        outcome.unconsumed += unconsumed.size();
        outcome.ambiguous += ambiguous.size();

        for (const Triple& t : unconsumed)
            if (reported++ < kMaxReported)
                out << "trial " << trial << " unconsumed: " << triple_line(t, *table)
                    << "\n";
        for (const auto& [t, consumers] : ambiguous)
            if (reported++ < kMaxReported) {
                out << "trial " << trial << " ambiguous: " << triple_line(t, *table)
                    << " consumers:";
                for (const auto& c : consumers) out << " " << c.canonical;
                out << "\n";
            }
    }
    out << "trials=" << outcome.trials << " unconsumed=" << outcome.unconsumed
        << " ambiguous=" << outcome.ambiguous << "\n";
    return outcome;
}

int run_check(const CheckConfig& config, std::ostream& out) {
    CheckOutcome outcome = run_check_trials(config, out);
    return outcome.unconsumed == 0 && outcome.ambiguous == 0 ? kExitOk : 1;
}

std::vector<BenchRow> run_bench_grid(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    const std::string sink =
        (std::filesystem::temp_directory_path() / "bench-ontology.nt").string();
    for (std::size_t size : config.sizes)
        for (std::size_t delta : config.deltas) {
            auto table = std::make_shared<TermTable>();
            ChangeLanguage lang = make_catalog(config.model, table);
            synth::VersionPair pair = synth::scaled_pair(config.seed, size, delta, table);

            BenchRow row;
            row.base_size = size;
            row.delta_size = delta;
            DetectOutcome out = detect_into(lang, AssociationStore{}, pair.old_v,
                                            pair.new_v, sink, config.threads,
                                            &row.prep_seconds);
            row.detections =
                out.report.simple_detected.size() + out.report.complex_detected.size();
            row.creation_seconds = out.report.creation_seconds;
            row.ingestion_seconds = out.report.ingestion_seconds;
            rows.push_back(row);
        }
    std::error_code ec;
    std::filesystem::remove(sink, ec);
    return rows;
}

int run_bench(const BenchConfig& config, std::ostream& out) {
    std::vector<BenchRow> rows = run_bench_grid(config);
    std::string csv = "base_size,delta_size,detections,prep_seconds,creation_seconds,"
                      "ingestion_seconds,total_seconds\n";
    for (const BenchRow& r : rows) {
        csv += std::to_string(r.base_size) + "," + std::to_string(r.delta_size) + "," +
               std::to_string(r.detections) + "," + std::to_string(r.prep_seconds) +
               "," + std::to_string(r.creation_seconds) + "," +
               std::to_string(r.ingestion_seconds) + "," +
               std::to_string(r.prep_seconds + r.creation_seconds +
                              r.ingestion_seconds) +
               "\n";
    }
    if (!config.csv_out.empty()) {
        std::ofstream f(config.csv_out, std::ios::binary);
        if (!f) {
            out << "i/o error: cannot open csv output: " << config.csv_out << "\n";
            return kExitIo;
        }
        f << csv;
    }
    out << csv;
    return kExitOk;
}

}  // namespace rdfdelta
