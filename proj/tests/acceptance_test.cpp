// End-to-end acceptance gate. Each criterion prints exactly one PASS/FAIL
// line; the process exits non-zero if any criterion fails. Run from the
// repository root (golden fixtures are resolved relative to it). Pass
// --update-golden to refresh the golden detection outputs after an intended
// behavior change.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle.hpp"
#include "rdfdelta/names.hpp"
#include "rdfdelta/ntriples.hpp"
#include "rdfdelta/ontology.hpp"
#include "rdfdelta/pipeline.hpp"
#include "rdfdelta/synth.hpp"
#include "rdfdelta/vocab.hpp"

using namespace rdfdelta;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
bool g_update_golden = false;

void report(int n, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() /
                   ("acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

// --- criterion 1: engine vs brute-force enumerator on random languages ------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    oracle::InstanceGen gen(0xC0FFEEu);
    std::size_t mismatches = 0;
    for (int i = 0; i < 500; ++i) mismatches += oracle::run_instance(gen, 2);
    double secs = seconds_since(t0);
    report(1, mismatches == 0 && secs < 60.0,
           "500 random languages/version pairs match the exhaustive enumerator "
           "(mismatches=" + std::to_string(mismatches) + ", " + fmt(secs) + "s)");
}

// --- criterion 2: catalog completeness/unambiguity over random mutations ----

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream sink;
    std::size_t unconsumed = 0, ambiguous = 0;
    for (CatalogId model : {CatalogId::RdfModel, CatalogId::DataCube}) {
        CheckConfig cfg;
        cfg.model = model;
        cfg.trials = 1000;
        cfg.seed = 42;
        CheckOutcome o = run_check_trials(cfg, sink);
        unconsumed += o.unconsumed;
        ambiguous += o.ambiguous;
    }
    double secs = seconds_since(t0);
    report(2, unconsumed == 0 && ambiguous == 0 && secs < 300.0,
           "1000 random trials per catalog: unconsumed=" + std::to_string(unconsumed) +
               " ambiguous=" + std::to_string(ambiguous) + " (" + fmt(secs) + "s)");
}

// --- criterion 3: reference fixtures against golden outputs -----------------

struct FixtureRun {
    bool ok = true;
    std::string detail;
    std::string ontology;
    nlohmann::json report;
};

FixtureRun run_fixture(const std::string& stem, CatalogId model,
                       const std::string& defs_path, const fs::path& tmp) {
    FixtureRun r;
    RunConfig cfg;
    cfg.old_path = "tests/golden/" + stem + "_v1.nt";
    cfg.new_path = "tests/golden/" + stem + "_v2.nt";
    cfg.model = model;
    cfg.complex_defs_path = defs_path;
    cfg.ontology_out_path = (tmp / (stem + "_ontology.nt")).string();
    cfg.report_out_path = (tmp / (stem + "_report.json")).string();

    std::ostringstream err;
    if (run_detect(cfg, err) != kExitOk) {
        r.ok = false;
        r.detail = stem + " run failed: " + err.str();
        return r;
    }
    r.ontology = read_file(cfg.ontology_out_path);
    std::string report_text = read_file(cfg.report_out_path);
    r.report = nlohmann::json::parse(report_text, nullptr, false);

    const fs::path golden_onto = "tests/golden/" + stem + "_ontology.nt";
    const fs::path golden_report = "tests/golden/" + stem + "_report.json";
    if (g_update_golden) {
        write_file(golden_onto, r.ontology);
        write_file(golden_report, report_text);
    }
    if (r.ontology != read_file(golden_onto)) {
        r.ok = false;
        r.detail += stem + " ontology differs from golden; ";
    }
    if (report_text != read_file(golden_report)) {
        r.ok = false;
        r.detail += stem + " report differs from golden; ";
    }
    return r;
}

void criterion3() {
    fs::path tmp = temp_dir();
    bool ok = true;
    std::string detail;

    FixtureRun fig4 = run_fixture("fig4", CatalogId::DataCube, "", tmp);
    ok &= fig4.ok;
    detail += fig4.detail;
    if (fig4.ok) {
        auto simple = fig4.report["simple_detected"];
        bool one = simple.size() == 1 &&
                   simple[0] ==
                       "Attach_Type_To_Measure("
                       "<http://datamarket.example/measure/meas7v8t>,"
                       "<http://datamarket.example/type/int>)@fig4_v1->fig4_v2";
        if (!one) {
            ok = false;
            detail += "measure fixture did not yield the single expected detection; ";
        }
    }

    FixtureRun fig5 = run_fixture("fig5", CatalogId::RdfModel,
                                  "tests/golden/mark_as_obsolete.json", tmp);
    ok &= fig5.ok;
    detail += fig5.detail;
    if (fig5.ok) {
        auto complex = fig5.report["complex_detected"];
        bool one = complex.size() == 1 &&
                   complex[0] ==
                       "Mark_as_Obsolete(<http://www.ebi.ac.uk/efo/EFO_0004151>)"
                       "@fig5_v1->fig5_v2";
        std::size_t consumes = 0;
        std::istringstream lines(fig5.ontology);
        std::string line;
        const std::string needle = "<" + names::prop_consumes() + ">";
        while (std::getline(lines, line)) {
            std::istringstream fields(line);
            std::string s, p;
            fields >> s >> p;
            if (p == needle) ++consumes;
        }
        if (!one || consumes != 1) {
            ok = false;
            detail += "obsolete-class fixture expected one complex detection with "
                      "one consumes edge, got " +
                      std::to_string(consumes) + " edges; ";
        }
    }

    if (ok) detail = "both reference fixtures reproduce their golden outputs exactly";
    report(3, ok, detail);
    std::error_code ec;
    fs::remove_all(tmp, ec);
}

// --- criterion 4: consumption priority between competing complex changes ----

void criterion4() {
    auto run = [&](int p_first, int p_second) {
        auto tt = std::make_shared<TermTable>();
        TermId type = tt->intern_uri(vocab::kRdfType);
        TermId cls = tt->intern_uri(vocab::kRdfsClass);
        TermId sub_class = tt->intern_uri(vocab::kRdfsSubClassOf);
        TermId efo = tt->intern_uri("http://www.ebi.ac.uk/efo/EFO_0004151");
        TermId obsolete = tt->intern_uri(
            "http://www.geneontology.org/formats/oboInOwl#ObsoleteClass");

        ChangeLanguage lang(tt);
        SimpleChangeDef sup;
        sup.name = "Add_Superclass";
        sup.params = {Variable{"a"}, Variable{"b"}};
        sup.delta_plus = {{Variable{"a"}, sub_class, Variable{"b"}}};
        sup.cond_old = sup.cond_new = p_empty();
        lang.register_simple(sup);

        auto consumer = [&](std::string name, int priority) {
            ComplexChangeDef def;
            def.name = std::move(name);
            def.params = {Variable{"cl"}};
            def.consumed = {{"Add_Superclass", {Variable{"cl"}, Variable{"obs"}}}};
            def.cond_old = p_filter(p_empty(), f_eq(Variable{"obs"}, obsolete));
            def.cond_new = p_empty();
            def.priority = priority;
            return def;
        };
        lang.register_complex(consumer("First_Consumer", p_first));
        lang.register_complex(consumer("Second_Consumer", p_second));

        DatasetBuilder ob(tt), nb(tt);
        ob.add(efo, type, cls);
        nb.add(efo, type, cls);
        nb.add(efo, sub_class, obsolete);
        EvalContext ctx = EvalContext::make(
            std::make_shared<const Dataset>(std::move(ob).build("v1")),
            std::make_shared<const Dataset>(std::move(nb).build("v2")));

        SimpleDetectionResult simple = detect_simple(lang, ctx);
        ChangesOntology store(tt);
        store.set_schema(emit_schema(lang));
        store.merge_instances(emit_detections(simple.detected, {}, lang));
        ctx.ontology = std::make_shared<const Dataset>(store.combined());
        return detect_complex(lang, ctx, {});
    };

    ComplexDetectionResult high = run(5, 2);
    bool higher_wins = high.detected.size() == 1 &&
                       high.detected.begin()->change_name == "First_Consumer" &&
                       high.warnings.empty();
    ComplexDetectionResult swapped = run(2, 5);
    bool swap_swaps = swapped.detected.size() == 1 &&
                      swapped.detected.begin()->change_name == "Second_Consumer";
    ComplexDetectionResult tied = run(3, 3);
    bool tie_warns = tied.detected.size() == 2 && !tied.warnings.empty();

    report(4, higher_wins && swap_swaps && tie_warns,
           std::string("priority fixture: higher-priority consumer wins (") +
               (higher_wins ? "yes" : "no") + "), swapping priorities swaps it (" +
               (swap_swaps ? "yes" : "no") + "), equal priorities detect both with a "
               "warning (" + (tie_warns ? "yes" : "no") + ")");
}

// --- criterion 5: emitted instance triples scale as 5 per detection ---------

void criterion5() {
    bool ok = true;
    std::string counts;
    for (std::size_t n : {std::size_t{100}, std::size_t{1000}, std::size_t{10000}}) {
        auto tt = std::make_shared<TermTable>();
        ChangeLanguage lang = rdf_catalog(tt);
        synth::VersionPair pair = synth::scaled_pair(7, 0, n, tt);
        EvalContext ctx = EvalContext::make(pair.old_v, pair.new_v);
        SimpleDetectionResult got = detect_simple(lang, ctx);
        Dataset batch = emit_detections(got.detected, {}, lang);
        ok &= got.detected.size() == n && batch.size() == 5 * n;
        counts += std::to_string(n) + "->" + std::to_string(batch.size()) + " ";
    }
    report(5, ok, "label-addition batches emit exactly five instance triples per "
                  "detection (" + counts + ")");
}

// --- criterion 6: cost tracks delta size, not dataset size ------------------

void criterion6() {
    BenchConfig cfg;
    cfg.model = CatalogId::RdfModel;
    cfg.sizes = {100000, 1000000};
    cfg.deltas = {10000, 100000};
    cfg.seed = 11;
    std::vector<BenchRow> rows = run_bench_grid(cfg);
    auto cost = [](const BenchRow& r) { return r.creation_seconds + r.ingestion_seconds; };
    // rows: (1e5,1e4) (1e5,1e5) (1e6,1e4) (1e6,1e5)
    double size_ratio = cost(rows[2]) / cost(rows[0]);   // 10x data, same delta
    double delta_ratio = cost(rows[3]) / cost(rows[2]);  // same data, 10x delta
    report(6, size_ratio < 3.0 && delta_ratio >= 3.0,
           "10x dataset growth at fixed delta costs " + fmt(size_ratio) +
               "x (<3x); 10x delta growth at fixed dataset costs " + fmt(delta_ratio) +
               "x (>=3x)");
}

// --- criterion 7: byte-identical outputs across thread counts ---------------

void criterion7() {
    fs::path tmp = temp_dir();
    auto tt = std::make_shared<TermTable>();
    synth::VersionPair pair = synth::scaled_pair(23, 1500, 400, tt);
    std::string extra = read_file("tests/golden/fig5_v2.nt");
    write_file(tmp / "v1.nt", serialize_ntriples(*pair.old_v) +
                                  read_file("tests/golden/fig5_v1.nt"));
    write_file(tmp / "v2.nt", serialize_ntriples(*pair.new_v) + extra);

    std::string first_onto, first_report;
    bool ok = true;
    for (unsigned threads : {1u, 4u, 8u}) {
        RunConfig cfg;
        cfg.old_path = (tmp / "v1.nt").string();
        cfg.new_path = (tmp / "v2.nt").string();
        cfg.model = CatalogId::RdfModel;
        cfg.complex_defs_path = "tests/golden/mark_as_obsolete.json";
        cfg.ontology_out_path = (tmp / "ontology.nt").string();
        cfg.report_out_path = (tmp / "report.json").string();
        cfg.threads = threads;
        std::ostringstream err;
        if (run_detect(cfg, err) != kExitOk) {
            ok = false;
            break;
        }
        std::string onto = read_file(cfg.ontology_out_path);
        std::string rep = read_file(cfg.report_out_path);
        if (threads == 1) {
            first_onto = onto;
            first_report = rep;
            ok &= !onto.empty() && !rep.empty();
        } else {
            ok &= onto == first_onto && rep == first_report;
        }
    }
    report(7, ok, "ontology and report bytes are identical with 1, 4, and 8 threads");
    std::error_code ec;
    fs::remove_all(tmp, ec);
}

// --- criterion 8: serialization round-trips and ingest idempotence ----------

void criterion8() {
    std::mt19937_64 rng(0xDEADBEEFu);
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    const std::vector<std::string> lexicals = {
        "plain", "with space", "quote\"inside", "back\\slash", "tab\tand\nnewline",
        "caf\xC3\xA9", "", "ends with dot .", "<looks-like-iri>"};
    const std::vector<std::string> langs = {"", "en", "en-US"};
    const std::vector<std::string> datatypes = {
        "", "http://www.w3.org/2001/XMLSchema#integer",
        "http://www.w3.org/2001/XMLSchema#dateTime"};

    bool round_trips = true;
    for (int trial = 0; trial < 1000 && round_trips; ++trial) {
        auto tt = std::make_shared<TermTable>();
        DatasetBuilder b(tt);
        std::size_t n = pick(31);
        for (std::size_t i = 0; i < n; ++i) {
            TermId s = tt->intern_uri("http://x.example/s" + std::to_string(pick(12)));
            TermId p = tt->intern_uri("http://x.example/p" + std::to_string(pick(6)));
            TermId o;
            if (pick(2) == 0) {
                o = tt->intern_uri("http://x.example/o" + std::to_string(pick(12)));
            } else {
                const std::string& lex = lexicals[pick(lexicals.size())];
                const std::string& lang = langs[pick(langs.size())];
                // A literal carries a language tag or a datatype, not both.
                const std::string& dt =
                    lang.empty() ? datatypes[pick(datatypes.size())] : std::string();
                o = tt->intern_literal(lex, lang, dt);
            }
            b.add(s, p, o);
        }
        Dataset ds = std::move(b).build("rt");
        std::string text = serialize_ntriples(ds);
        auto tt2 = std::make_shared<TermTable>();
        Dataset back = parse_ntriples(text, tt2, "rt");
        round_trips &= serialize_ntriples(back) == text && back.size() == ds.size();
    }

    // Re-ingesting an already-ingested batch merges nothing new.
    bool idempotent = true;
    fs::path sink = fs::temp_directory_path() / "acceptance_ingest.nt";
    for (int trial = 0; trial < 20 && idempotent; ++trial) {
        auto tt = std::make_shared<TermTable>();
        ChangeLanguage lang = rdf_catalog(tt);
        synth::VersionPair pair = synth::scaled_pair(1000 + trial, 20, 30, tt);
        EvalContext ctx = EvalContext::make(pair.old_v, pair.new_v);
        Dataset batch =
            emit_detections(detect_simple(lang, ctx).detected, {}, lang);
        ChangesOntology store(tt);
        IngestStats first = ingest(batch, sink.string(), store);
        IngestStats second = ingest(batch, sink.string(), store);
        idempotent &= first.triples_merged == batch.size() &&
                      second.triples_merged == 0 &&
                      store.instances().size() == batch.size();
    }
    std::error_code ec;
    fs::remove(sink, ec);

    report(8, round_trips && idempotent,
           std::string("1000 random datasets round-trip byte-identically (") +
               (round_trips ? "yes" : "no") + "); repeated ingestion adds no "
               "triples (" + (idempotent ? "yes" : "no") + ")");
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--update-golden") g_update_golden = true;

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    if (g_failures == 0) {
        std::printf("all 8 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
