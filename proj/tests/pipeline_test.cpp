#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rdfdelta/pipeline.hpp"

using namespace rdfdelta;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("pipeline_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string write(const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p.string();
    }
    std::string path(const std::string& name) { return (dir / name).string(); }
    std::string read(const std::string& name) {
        std::ifstream in(dir / name, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

const char* kOldV1 =
    "<http://datamarket.example/measure/meas7v8t> "
    "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
    "<http://purl.org/linked-data/cube#MeasureProperty> .\n";

const std::string kNewV2 =
    std::string(kOldV1) +
    "<http://datamarket.example/measure/meas7v8t> "
    "<http://www.w3.org/2000/01/rdf-schema#range> "
    "<http://datamarket.example/type/int> .\n";

}  // namespace

TEST_CASE("run_detect end to end") {
    TempDir tmp;
    RunConfig cfg;
    cfg.old_path = tmp.write("v1.nt", kOldV1);
    cfg.new_path = tmp.write("v2.nt", kNewV2);
    cfg.model = CatalogId::DataCube;
    cfg.ontology_out_path = tmp.path("ontology.nt");
    cfg.report_out_path = tmp.path("report.json");

    std::ostringstream err;
    CHECK(run_detect(cfg, err) == kExitOk);
    CHECK(err.str().empty());

    auto report = nlohmann::json::parse(tmp.read("report.json"));
    CHECK(report["old_version"] == "v1");
    CHECK(report["new_version"] == "v2");
    CHECK(report["delta"]["added"] == 1);
    CHECK(report["delta"]["deleted"] == 0);
    CHECK(report["counts"]["Attach_Type_To_Measure"] == 1);
    CHECK(report["simple_detected"].size() == 1);
    CHECK(std::string(report["simple_detected"][0]).starts_with(
        "Attach_Type_To_Measure(<http://datamarket.example/measure/meas7v8t>"));
    CHECK(report["diagnostics"]["unconsumed_delta"].empty());
    CHECK(report["diagnostics"]["ambiguous_delta"].empty());
    CHECK(report["ontology"]["instance_triples"] == 5);
    CHECK(!report.contains("timings"));  // only emitted with --timings

    std::string onto = tmp.read("ontology.nt");
    CHECK(!onto.empty());
    CHECK(onto.find("http://rdf-delta.dev/co#attm_p1") != std::string::npos);

    SUBCASE("timings appear on request") {
        cfg.timings = true;
        CHECK(run_detect(cfg, err) == kExitOk);
        auto timed = nlohmann::json::parse(tmp.read("report.json"));
        CHECK(timed.contains("timings"));
    }
    SUBCASE("report bytes are identical across thread counts") {
        cfg.report_out_path = tmp.path("report1.json");
        cfg.threads = 1;
        REQUIRE(run_detect(cfg, err) == kExitOk);
        cfg.report_out_path = tmp.path("report4.json");
        cfg.threads = 4;
        REQUIRE(run_detect(cfg, err) == kExitOk);
        CHECK(tmp.read("report1.json") == tmp.read("report4.json"));
    }
}

TEST_CASE("run_detect with identical versions reports an empty delta") {
    TempDir tmp;
    RunConfig cfg;
    cfg.old_path = tmp.write("v1.nt", kNewV2);
    cfg.new_path = tmp.write("v2.nt", kNewV2);
    cfg.model = CatalogId::DataCube;
    cfg.strict = true;  // an empty delta has no diagnostics either
    cfg.ontology_out_path = tmp.path("ontology.nt");
    cfg.report_out_path = tmp.path("report.json");
    std::ostringstream err;
    CHECK(run_detect(cfg, err) == kExitOk);
    auto report = nlohmann::json::parse(tmp.read("report.json"));
    CHECK(report["delta"]["added"] == 0);
    CHECK(report["delta"]["deleted"] == 0);
    CHECK(report["simple_detected"].empty());
    CHECK(report["ontology"]["instance_triples"] == 0);
}

TEST_CASE("run_detect error paths") {
    TempDir tmp;
    RunConfig cfg;
    cfg.model = CatalogId::DataCube;
    cfg.ontology_out_path = tmp.path("ontology.nt");
    cfg.report_out_path = tmp.path("report.json");
    std::ostringstream err;

    SUBCASE("missing input file") {
        cfg.old_path = tmp.path("absent.nt");
        cfg.new_path = tmp.write("v2.nt", kNewV2);
        CHECK(run_detect(cfg, err) == kExitIo);
        CHECK(err.str().find("i/o error") != std::string::npos);
    }
    SUBCASE("malformed N-Triples") {
        cfg.old_path = tmp.write("bad.nt", "this is not a triple\n");
        cfg.new_path = tmp.write("v2.nt", kNewV2);
        CHECK(run_detect(cfg, err) == kExitParse);
    }
    SUBCASE("blank nodes are rejected at parse time") {
        cfg.old_path = tmp.write(
            "bnode.nt", "_:b <http://x.example/p> <http://x.example/o> .\n");
        cfg.new_path = tmp.write("v2.nt", kNewV2);
        CHECK(run_detect(cfg, err) == kExitParse);
    }
    SUBCASE("malformed complex definitions") {
        cfg.old_path = tmp.write("v1.nt", kOldV1);
        cfg.new_path = tmp.write("v2.nt", kNewV2);
        cfg.complex_defs_path = tmp.write("defs.json", "{\"not\": \"an array\"}");
        CHECK(run_detect(cfg, err) == kExitParse);
    }
    SUBCASE("strict mode turns diagnostics into exit 2") {
        // A CodedProperty typing is outside every cube-catalog change shape.
        cfg.old_path = tmp.write("v1.nt", "");
        cfg.new_path = tmp.write(
            "v2.nt",
            "<http://x.example/p> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
            "<http://purl.org/linked-data/cube#CodedProperty> .\n");
        cfg.strict = false;
        CHECK(run_detect(cfg, err) == kExitOk);
        cfg.strict = true;
        CHECK(run_detect(cfg, err) == kExitDiagnostics);
        auto report = nlohmann::json::parse(tmp.read("report.json"));
        CHECK(report["diagnostics"]["unconsumed_delta"].size() == 1);
    }
}

TEST_CASE("run_check") {
    std::ostringstream out;

    SUBCASE("zero trials pass vacuously") {
        CheckConfig cfg;
        cfg.trials = 0;
        CHECK(run_check(cfg, out) == kExitOk);
        CHECK(out.str() == "trials=0 unconsumed=0 ambiguous=0\n");
    }
    SUBCASE("a handful of trials on both catalogs stay clean") {
        for (CatalogId model : {CatalogId::RdfModel, CatalogId::DataCube}) {
            CheckConfig cfg;
            cfg.model = model;
            cfg.trials = 25;
            cfg.seed = 7;
            CheckOutcome o = run_check_trials(cfg, out);
            CHECK(o.unconsumed == 0);
            CHECK(o.ambiguous == 0);
        }
    }
    SUBCASE("an injected duplicate change is caught as ambiguity") {
        CheckConfig cfg;
        cfg.model = CatalogId::RdfModel;
        cfg.trials = 25;
        cfg.seed = 7;
        cfg.inject_duplicate = true;
        CHECK(run_check(cfg, out) == 1);
        CheckOutcome o = run_check_trials(cfg, out);
        CHECK(o.ambiguous > 0);
        CHECK(o.unconsumed == 0);
    }
}

TEST_CASE("run_bench emits one row per grid cell") {
    BenchConfig cfg;
    cfg.model = CatalogId::RdfModel;
    cfg.sizes = {50, 100};
    cfg.deltas = {5, 10};
    std::vector<BenchRow> rows = run_bench_grid(cfg);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].base_size == 50);
    CHECK(rows[0].delta_size == 5);
    CHECK(rows[3].base_size == 100);
    CHECK(rows[3].delta_size == 10);
    // The scaled pairs add exactly `delta` label triples, each one detection.
    for (const BenchRow& r : rows) CHECK(r.detections == r.delta_size);

    TempDir tmp;
    cfg.csv_out = tmp.path("bench.csv");
    std::ostringstream out;
    CHECK(run_bench(cfg, out) == kExitOk);
    std::string csv = tmp.read("bench.csv");
    CHECK(csv == out.str());
    CHECK(csv.starts_with("base_size,delta_size,detections,"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
}
